#pragma once

#include "discrimlab/arrangement.hpp"

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace discrimlab {

/// Linear form cutting out D_L in the space of translates. Its support is
/// exactly L, and coeffs . t = 0 iff the translated hyperplanes indexed by L
/// share a point.
struct DiscNormal {
    IndexSet L;
    Vec coeffs;

    friend bool operator==(const DiscNormal&, const DiscNormal&) = default;
};

/// Cofactors of the bordered determinant det[a_L | t_L], expanded along the
/// t column, with the sign fixed so the first nonzero entry is positive.
DiscNormal disc_normal(const CentralArrangement& a, IndexSet L);

bool in_DL(const CentralArrangement& a, const Translate& t, IndexSet L);

/// The discriminantal arrangement B(n,k,A): all D_L with |L| = k+1,
/// precomputed in lexicographic order of L.
class DiscriminantalArrangement {
public:
    explicit DiscriminantalArrangement(CentralArrangement a);

    const CentralArrangement& base() const { return base_; }
    std::size_t n() const { return base_.n(); }
    std::size_t k() const { return base_.k(); }

    const std::vector<DiscNormal>& hyperplanes() const { return hyperplanes_; }
    const DiscNormal& normal(IndexSet L) const;

    /// Row span of the normals of every D_L with L inside some member.
    Subspace normal_span(const Family& family) const;

private:
    CentralArrangement base_;
    std::vector<DiscNormal> hyperplanes_;
    std::unordered_map<std::uint64_t, std::size_t> by_mask_;
};

/// The intersection of D_{S_i} over a family. `rank` is the codimension in
/// the space of translates, i.e. the rank of the stacked defining normals.
struct Flat {
    Family family;
    Subspace subspace;
    std::size_t rank = 0;
};

Flat flat_of(const DiscriminantalArrangement& d, const Family& family);
Flat flat_of(const CentralArrangement& a, const Family& family);

/// Stateful helper for repeated simplicity tests over the same arrangement.
/// Memoizes the spans of D_S. Not thread-safe; use one per worker.
class SimplicityChecker {
public:
    explicit SimplicityChecker(const DiscriminantalArrangement& d) : d_(&d) {}

    /// True iff no sub-intersection of at least two members equals some D_S
    /// with |S| > k+1. Only S between the sub-union and the full union can
    /// contain the sub-intersection, so the search stops there.
    bool is_simple(const Family& T);

    const Subspace& span_of_DS(IndexSet S);

private:
    const DiscriminantalArrangement* d_;
    std::unordered_map<std::uint64_t, Subspace> ds_cache_;
};

bool is_simple(const DiscriminantalArrangement& d, const Family& T);
bool is_simple(const CentralArrangement& a, const Family& T);

struct CensusEntry {
    Subspace normal_span;  // row span of the defining normals (dimension 2)
    Family members;        // every D_L containing the flat
    std::size_t multiplicity() const { return members.size(); }
    Subspace flat() const { return kernel_basis(normal_span.basis()); }
};

/// Groups every pair of D_L by the rank-2 flat they cut out. Entries are
/// ordered by their canonical normal span.
std::vector<CensusEntry> rank2_census(const DiscriminantalArrangement& d);
std::vector<CensusEntry> rank2_census(const CentralArrangement& a);

struct CensusAggregate {
    std::size_t multiplicity = 0;
    std::size_t count = 0;
};

/// Flat counts per multiplicity, ascending in multiplicity.
std::vector<CensusAggregate> aggregate(const std::vector<CensusEntry>& census);

/// Total order on canonical subspaces, used for deterministic output.
bool subspace_less(const Subspace& a, const Subspace& b);

}  // namespace discrimlab
