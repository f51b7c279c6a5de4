#include "discrimlab/index_set.hpp"

#include "discrimlab/exact_linalg.hpp"

#include <algorithm>

namespace discrimlab {

IndexSet::IndexSet(std::initializer_list<std::size_t> idxs) : IndexSet(std::vector<std::size_t>(idxs)) {}

IndexSet::IndexSet(const std::vector<std::size_t>& idxs) {
    for (auto i : idxs) {
        if (i >= kMaxHyperplanes) throw PreconditionError("index out of range for IndexSet: " + std::to_string(i));
        bits_ |= std::uint64_t{1} << i;
    }
}

IndexSet IndexSet::full(std::size_t n) {
    if (n > kMaxHyperplanes) throw PreconditionError("at most 64 hyperplanes are supported");
    return from_mask(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

IndexSet IndexSet::with(std::size_t i) const { return from_mask(bits_ | (std::uint64_t{1} << i)); }
IndexSet IndexSet::without(std::size_t i) const { return from_mask(bits_ & ~(std::uint64_t{1} << i)); }

std::vector<std::size_t> IndexSet::elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
}

std::string IndexSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto i : elements()) {
        if (!first) s += ',';
        s += std::to_string(i + 1);
        first = false;
    }
    return s + "}";
}

bool operator<(IndexSet a, IndexSet b) {
    const auto ea = a.elements();
    const auto eb = b.elements();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t m = idx.size();
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t m) {
    std::vector<IndexSet> out;
    if (m > n) return out;
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    do {
        out.emplace_back(idx);
    } while (next_combination(idx, n));
    return out;
}

IndexSet family_union(const Family& f) {
    IndexSet u;
    for (auto s : f) u = u | s;
    return u;
}

IndexSet family_intersection(const Family& f) {
    if (f.empty()) return {};
    IndexSet x = f.front();
    for (auto s : f) x = x & s;
    return x;
}

Family canonical(Family f) {
    std::sort(f.begin(), f.end());
    return f;
}

bool family_less(const Family& a, const Family& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const Family& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ',';
        s += f[i].to_string();
    }
    return s + "}";
}

}  // namespace discrimlab
