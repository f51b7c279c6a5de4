#include "discrimlab/arrangement.hpp"

#include <string>

namespace discrimlab {

NotGeneric::NotGeneric(IndexSet offending)
    : std::invalid_argument("normals " + offending.to_string() + " are linearly dependent"), offending_(offending) {}

ZeroNormal::ZeroNormal(std::size_t index)
    : std::invalid_argument("normal " + std::to_string(index + 1) + " is the zero vector"), index_(index) {}

CentralArrangement CentralArrangement::create(std::size_t k, std::vector<Vec> normals) {
    const std::size_t n = normals.size();
    if (k < 1 || k >= n) throw PreconditionError("need 1 <= k < n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    if (n > kMaxHyperplanes) throw PreconditionError("at most 64 hyperplanes are supported");
    for (std::size_t i = 0; i < n; ++i) {
        if (normals[i].size() != k) throw DimensionError("normal " + std::to_string(i + 1) + " has wrong length");
        if (is_zero(normals[i])) throw ZeroNormal(i);
    }
    CentralArrangement a(k, std::move(normals));
    for (auto s : subsets_of_size(n, k)) {
        if (det(a.normal_rows(s)) == 0) throw NotGeneric(s);
    }
    return a;
}

Mat CentralArrangement::normal_rows(IndexSet idxs) const {
    Mat m(0, k_);
    for (auto p : idxs.elements()) m.push_row(normals_.at(p));
    return m;
}

bool is_generic_subset(const CentralArrangement& a, IndexSet idxs) {
    if (idxs.size() > a.k()) throw PreconditionError("is_generic_subset: more than k indices");
    if (idxs.bound() > a.n()) throw PreconditionError("is_generic_subset: index out of range");
    return rank(a.normal_rows(idxs)) == idxs.size();
}

Subspace central_subspace(const CentralArrangement& a) {
    return Subspace::span_of(a.normal_matrix().transpose());
}

std::optional<Vec> common_point(const CentralArrangement& a, const Translate& t, IndexSet idxs) {
    if (t.values.size() != a.n()) throw DimensionError("translate length differs from n");
    if (idxs.empty()) throw PreconditionError("common_point: empty index set");
    if (idxs.bound() > a.n()) throw PreconditionError("common_point: index out of range");
    Vec rhs;
    for (auto p : idxs.elements()) rhs.push_back(t.values[p]);
    auto res = solve_consistent(a.normal_rows(idxs), rhs);
    return res.witness;
}

}  // namespace discrimlab
