#pragma once

// Non-very-genericity machinery: r-sets, K_T configurations, and the linear
// certificate for (r,s)-dependency.

#include "discrimlab/discriminantal.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace discrimlab {

/// An ordered family {L_1, ..., L_r} of distinct (k+1)-subsets of [n], r >= 2.
class TSet {
public:
    TSet(std::size_t n, std::size_t k, Family members);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    std::size_t r() const { return members_.size(); }
    const Family& members() const { return members_; }
    IndexSet operator[](std::size_t i) const { return members_[i]; }

    friend bool operator==(const TSet&, const TSet&) = default;

private:
    std::size_t n_;
    std::size_t k_;
    Family members_;
};

/// Every element of the union lies in at least two members, and members
/// pairwise intersect.
bool is_r_set(const TSet& T);

/// Streams every r-set over [n] with members sorted lexicographically, in
/// lexicographic order of the member lists. Return false to stop.
void for_each_r_set(std::size_t n, std::size_t k, std::size_t r, const std::function<bool(const TSet&)>& visit);
std::vector<TSet> enumerate_r_sets(std::size_t n, std::size_t k, std::size_t r);

class MissingVertex : public std::runtime_error {
public:
    explicit MissingVertex(std::size_t member);
    std::size_t member() const { return member_; }

private:
    std::size_t member_;
};

/// Thrown by witness_translate when every common translate is central.
class OnlyCentral : public std::runtime_error {
public:
    OnlyCentral();
};

struct KTEdge {
    std::size_t i = 0;
    std::size_t j = 0;
    Vec direction;  // P_j - P_i
};

/// An extra hyperplane passing through P_member: the translate is not K_T
/// in the strict sense.
struct KTViolation {
    std::size_t member = 0;
    std::size_t extra_index = 0;
};

struct KTConfiguration {
    std::vector<Vec> points;
    std::vector<KTEdge> edges;  // all pairs i < j
    std::vector<KTViolation> violations;

    bool strict() const { return violations.empty(); }
    /// Some two vertices coincide.
    bool degenerate() const;
};

KTConfiguration kt_configuration(const CentralArrangement& a, const Translate& t, const TSet& T);

/// A non-central translate in the intersection of the D_{L_i}: the first
/// canonical kernel basis vector outside the central subspace.
Translate witness_translate(const CentralArrangement& a, const TSet& T);
Translate witness_translate(const DiscriminantalArrangement& d, const TSet& T);

struct DependencyCertificate {
    TSet T;
    std::size_t l = 0;
    Family S_l;
    std::size_t s = 0;
    std::size_t rank_base = 0;  // rank of the normals of T minus S_l
    std::size_t rank_full = 0;  // rank_base + 1
    std::size_t flat_rank = 0;  // rank of the whole intersection
    std::size_t multiplicity() const { return T.r(); }
};

/// Linear test for (r,s)-dependency at (l, S_l). With N the row span of the
/// normals c of T minus S_l and a pivot L_j in S_l, certifies iff c_j is not
/// in N, and every c_i - (c_i[l] / c_j[l]) c_j with L_i in S_l lies in N.
/// `pivot` indexes into S_l; the outcome does not depend on it.
std::optional<DependencyCertificate> certify_rs_dependency(const DiscriminantalArrangement& d, const TSet& T,
                                                           std::size_t l, const Family& S_l, std::size_t pivot = 0);
std::optional<DependencyCertificate> certify_rs_dependency(const CentralArrangement& a, const TSet& T, std::size_t l,
                                                           const Family& S_l);

/// Every admissible (l, S_l) for T: l in the union but not the intersection,
/// S_l any subfamily of at least two members containing l.
std::vector<std::pair<std::size_t, Family>> admissible_choices(const TSet& T);

/// Block-shaped dependency test for n = 3s, k = 2s-1 and a 3-set with
/// |L_i| = 2s, |L_i ∩ L_j| = s. True iff the spaces
/// H_ij = ∩_{p in L_i ∩ L_j} ker(a_p) span only 2s-2 dimensions.
bool ls_dependency_check(const CentralArrangement& a, const TSet& T);

struct NvgFinding {
    TSet T;
    std::size_t rank = 0;
    std::vector<DependencyCertificate> certificates;
};

/// Every simple r-set (r <= r_max) whose flat rank is below r, each with all
/// certificates found over admissible (l, S_l). Ordered by r, then T.
std::vector<NvgFinding> find_simple_nvg(const CentralArrangement& a, std::size_t r_max, std::size_t jobs = 1);
std::vector<NvgFinding> find_simple_nvg(const DiscriminantalArrangement& d, std::size_t r_max, std::size_t jobs = 1);

}  // namespace discrimlab
