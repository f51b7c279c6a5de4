#include "discrimlab/discriminantal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace discrimlab {

namespace {

void check_L(const CentralArrangement& a, IndexSet L) {
    if (L.size() != a.k() + 1) throw PreconditionError("D_L needs |L| = k+1, got " + L.to_string());
    if (L.bound() > a.n()) throw PreconditionError("D_L index out of range: " + L.to_string());
}

// Every (k+1)-subset of S, as masks.
std::vector<IndexSet> hyperplanes_inside(IndexSet S, std::size_t k) {
    const auto elems = S.elements();
    std::vector<IndexSet> out;
    for (auto pick : subsets_of_size(elems.size(), k + 1)) {
        IndexSet L;
        for (auto j : pick.elements()) L = L.with(elems[j]);
        out.push_back(L);
    }
    return out;
}

}  // namespace

DiscNormal disc_normal(const CentralArrangement& a, IndexSet L) {
    check_L(a, L);
    DiscNormal out{L, Vec(a.n())};
    const auto elems = L.elements();
    for (std::size_t p = 0; p < elems.size(); ++p) {
        const Rational minor = det(a.normal_rows(L.without(elems[p])));
        out.coeffs[elems[p]] = (p % 2 == 0) ? minor : Rational(-minor);
    }
    auto first = std::find_if(out.coeffs.begin(), out.coeffs.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (first != out.coeffs.end() && sgn(*first) < 0)
        for (auto& x : out.coeffs) x = -x;
    return out;
}

bool in_DL(const CentralArrangement& a, const Translate& t, IndexSet L) {
    if (t.values.size() != a.n()) throw DimensionError("translate length differs from n");
    return sgn(dot(disc_normal(a, L).coeffs, t.values)) == 0;
}

// ---------------------------------------------------------------------------

DiscriminantalArrangement::DiscriminantalArrangement(CentralArrangement a) : base_(std::move(a)) {
    for (auto L : subsets_of_size(base_.n(), base_.k() + 1)) {
        by_mask_.emplace(L.mask(), hyperplanes_.size());
        hyperplanes_.push_back(disc_normal(base_, L));
    }
}

const DiscNormal& DiscriminantalArrangement::normal(IndexSet L) const {
    auto it = by_mask_.find(L.mask());
    if (it == by_mask_.end()) throw PreconditionError("no hyperplane D_L for L = " + L.to_string());
    return hyperplanes_[it->second];
}

Subspace DiscriminantalArrangement::normal_span(const Family& family) const {
    Mat stacked(0, n());
    std::set<std::uint64_t> seen;
    for (auto S : family) {
        if (S.size() < k() + 1) throw PreconditionError("family member " + S.to_string() + " has fewer than k+1 elements");
        if (S.bound() > n()) throw PreconditionError("family member " + S.to_string() + " out of range");
        for (auto L : hyperplanes_inside(S, k()))
            if (seen.insert(L.mask()).second) stacked.push_row(normal(L).coeffs);
    }
    return Subspace::span_of(stacked);
}

Flat flat_of(const DiscriminantalArrangement& d, const Family& family) {
    auto span = d.normal_span(family);
    Flat f;
    f.family = family;
    f.rank = span.dim();
    f.subspace = span.annihilator();
    return f;
}

Flat flat_of(const CentralArrangement& a, const Family& family) {
    return flat_of(DiscriminantalArrangement(a), family);
}

// ---------------------------------------------------------------------------

const Subspace& SimplicityChecker::span_of_DS(IndexSet S) {
    auto it = ds_cache_.find(S.mask());
    if (it == ds_cache_.end()) it = ds_cache_.emplace(S.mask(), d_->normal_span({S})).first;
    return it->second;
}

bool SimplicityChecker::is_simple(const Family& T) {
    const std::size_t r = T.size();
    const std::size_t k = d_->k();
    if (r < 2) throw PreconditionError("is_simple: need at least two members");
    if (r >= 64) throw PreconditionError("is_simple: too many members");
    for (std::size_t i = 0; i < r; ++i) {
        if (T[i].size() != k + 1) throw PreconditionError("is_simple: member " + T[i].to_string() + " is not a (k+1)-subset");
        for (std::size_t j = 0; j < i; ++j)
            if (T[i] == T[j]) throw PreconditionError("is_simple: repeated member " + T[i].to_string());
    }

    const IndexSet full = family_union(T);
    for (std::uint64_t I = 1; I < (std::uint64_t{1} << r); ++I) {
        if (std::popcount(I) < 2) continue;
        Family sub;
        for (std::size_t i = 0; i < r; ++i)
            if ((I >> i) & 1U) sub.push_back(T[i]);
        const IndexSet base = family_union(sub);
        // Equal flats have equal normal spans, and the spans are canonical.
        const Subspace sub_span = d_->normal_span(sub);
        const IndexSet free = full - base;
        // enumerate every extra ⊆ free
        std::uint64_t extra = 0;
        do {
            const IndexSet S = base | IndexSet::from_mask(extra);
            if (S.size() > k + 1 && span_of_DS(S) == sub_span) return false;
            extra = (extra - free.mask()) & free.mask();
        } while (extra != 0);
    }
    return true;
}

bool is_simple(const DiscriminantalArrangement& d, const Family& T) { return SimplicityChecker(d).is_simple(T); }

bool is_simple(const CentralArrangement& a, const Family& T) { return is_simple(DiscriminantalArrangement(a), T); }

// ---------------------------------------------------------------------------

bool subspace_less(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim();
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    const Mat& x = a.basis();
    const Mat& y = b.basis();
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) {
            if (x(r, c) < y(r, c)) return true;
            if (y(r, c) < x(r, c)) return false;
        }
    return false;
}

std::vector<CensusEntry> rank2_census(const DiscriminantalArrangement& d) {
    struct Less {
        bool operator()(const Subspace& a, const Subspace& b) const { return subspace_less(a, b); }
    };
    std::map<Subspace, std::set<std::uint64_t>, Less> groups;
    const auto& hs = d.hyperplanes();
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            auto span = Subspace::span_of({hs[i].coeffs, hs[j].coeffs}, d.n());
            auto& members = groups[std::move(span)];
            members.insert(hs[i].L.mask());
            members.insert(hs[j].L.mask());
        }
    }
    std::vector<CensusEntry> out;
    out.reserve(groups.size());
    for (auto& [span, masks] : groups) {
        CensusEntry e{span, {}};
        for (auto m : masks) e.members.push_back(IndexSet::from_mask(m));
        e.members = canonical(std::move(e.members));
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CensusEntry> rank2_census(const CentralArrangement& a) {
    return rank2_census(DiscriminantalArrangement(a));
}

std::vector<CensusAggregate> aggregate(const std::vector<CensusEntry>& census) {
    std::map<std::size_t, std::size_t> counts;
    for (const auto& e : census) ++counts[e.multiplicity()];
    std::vector<CensusAggregate> out;
    for (auto [m, c] : counts) out.push_back({m, c});
    return out;
}

}  // namespace discrimlab
