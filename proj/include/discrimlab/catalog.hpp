#pragma once

// Reproducible inputs: the named examples and seeded random arrangements.

#include "discrimlab/nvg.hpp"

#include <array>
#include <cstddef>
#include <cstdint>

namespace discrimlab {

/// SplitMix64 (Steele, Lea and Flood), the 64-bit generator of java.util.SplittableRandom.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform integer in [lo, hi] by rejection: draws below 2^64 mod m are
    /// discarded and the rest reduced mod m, where m = hi - lo + 1.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

struct Seed {
    std::uint64_t value = 0;
};

/// k = 1 and every normal equal to (1). Its discriminantal arrangement is the
/// braid arrangement t_i = t_j.
CentralArrangement braid(std::size_t n);

struct QuadrilateralExample {
    CentralArrangement arrangement;
    TSet T;
    Translate translate;  // the lines through the original four points
};

/// The six lines through pairs of four points in general position, moved to
/// the origin. Lines are numbered P1P2, P1P3, P1P4, P2P3, P2P4, P3P4 so the
/// lines through P_i are L_1 = {1,2,3}, L_2 = {1,4,5}, L_3 = {2,4,6},
/// L_4 = {3,5,6}.
QuadrilateralExample quadrilateral(const std::array<Vec, 4>& points);

/// quadrilateral() on the points (0,0), (4,0), (3,4), (1,3).
QuadrilateralExample crapo();

struct FalkExample {
    CentralArrangement arrangement;
    TSet T;  // {1,2,3,4}, {1,2,5,6}, {3,4,5,6}
};

/// Six planes through the origin in Q^3 whose pairwise lines
/// a1 x a2, a3 x a4, a5 x a6 span only a plane.
FalkExample falk();

struct RandomDraw {
    CentralArrangement arrangement;
    std::size_t resamples = 0;  // rejected non-generic draws
};

/// Integer normals drawn uniformly from [-bound, bound] by SplitMix64, row by
/// row. A non-generic draw is discarded and drawing continues on the same
/// stream.
RandomDraw random_arrangement_draw(std::size_t n, std::size_t k, Seed seed, std::int64_t coeff_bound);
CentralArrangement random_arrangement(std::size_t n, std::size_t k, Seed seed, std::int64_t coeff_bound = 100);

}  // namespace discrimlab
