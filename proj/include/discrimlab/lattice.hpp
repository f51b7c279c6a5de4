#pragma once

// The very generic reference model for B(n,k,A).

#include "discrimlab/discriminantal.hpp"

#include <cstddef>
#include <functional>
#include <optional>

namespace discrimlab {

/// A candidate lattice element {S_1, ..., S_m} with every |S_i| >= k+1.
class SetFamily {
public:
    SetFamily(std::size_t n, std::size_t k, Family members);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    const Family& members() const { return members_; }

private:
    std::size_t n_;
    std::size_t k_;
    Family members_;
};

/// |U_{i in I} S_i| > k + sum_{i in I}(|S_i| - k) for every I with |I| >= 2.
bool athanasiadis_condition(const SetFamily& f);

/// sum (|S_i| - k), the rank of the intersection when A is very generic.
/// Throws PreconditionError when the family fails the condition above.
std::size_t expected_rank(const SetFamily& f);

struct Verdict {
    std::size_t r_max = 0;
    std::optional<Family> witness;  // first simple family with rank < multiplicity
    std::size_t rank = 0;           // valid when witness is set

    bool defect_found() const { return witness.has_value(); }
};

/// Scans every family of 2..r_max distinct (k+1)-subsets, by increasing size
/// then lexicographically, for a simple intersection whose rank is below its
/// multiplicity. A clean verdict only means no such defect exists up to r_max.
Verdict very_generic_upto(const CentralArrangement& a, std::size_t r_max, std::size_t jobs = 1);
Verdict very_generic_upto(const DiscriminantalArrangement& d, std::size_t r_max, std::size_t jobs = 1);

/// Visits every simple family of 2..r_max (k+1)-subsets in the same order as
/// very_generic_upto, passing the flat rank. Return false to stop.
void for_each_simple_family(const DiscriminantalArrangement& d, std::size_t r_max,
                            const std::function<bool(const Family&, std::size_t rank)>& visit);

}  // namespace discrimlab
