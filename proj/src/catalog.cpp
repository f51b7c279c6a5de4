#include "discrimlab/catalog.hpp"

#include <limits>
#include <optional>
#include <string>

namespace discrimlab {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw PreconditionError("uniform: empty range");
    const std::uint64_t m = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (m == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
    const std::uint64_t threshold = (0 - m) % m;
    std::uint64_t u = next();
    while (u < threshold) u = next();
    return lo + static_cast<std::int64_t>(u % m);
}

CentralArrangement braid(std::size_t n) {
    if (n < 2) throw PreconditionError("braid: need n >= 2");
    return CentralArrangement::create(1, std::vector<Vec>(n, Vec{1}));
}

QuadrilateralExample quadrilateral(const std::array<Vec, 4>& points) {
    for (const auto& p : points)
        if (p.size() != 2) throw DimensionError("quadrilateral: points must lie in Q^2");
    auto cross2 = [](const Vec& o, const Vec& a, const Vec& b) -> Rational {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            for (std::size_t l = j + 1; l < 4; ++l)
                if (sgn(cross2(points[i], points[j], points[l])) == 0)
                    throw PreconditionError("quadrilateral: points " + std::to_string(i + 1) + ", " +
                                            std::to_string(j + 1) + ", " + std::to_string(l + 1) + " are collinear");

    std::vector<Vec> normals;
    Vec offsets;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            // normal of the line through P_i and P_j
            Vec a{points[i][1] - points[j][1], points[j][0] - points[i][0]};
            offsets.push_back(dot(a, points[i]));
            normals.push_back(std::move(a));
        }
    }
    auto arr = CentralArrangement::create(2, std::move(normals));
    TSet T(6, 2, {IndexSet{0, 1, 2}, IndexSet{0, 3, 4}, IndexSet{1, 3, 5}, IndexSet{2, 4, 5}});
    return {std::move(arr), std::move(T), Translate{std::move(offsets)}};
}

QuadrilateralExample crapo() { return quadrilateral({Vec{0, 0}, Vec{4, 0}, Vec{3, 4}, Vec{1, 3}}); }

namespace {

Vec cross3(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::optional<CentralArrangement> try_falk(const std::vector<Vec>& first_four, const Vec& a5, const Vec& a6) {
    if (is_zero(cross3(a5, a6))) return std::nullopt;
    std::vector<Vec> normals = first_four;
    normals.push_back(a5);
    normals.push_back(a6);
    try {
        return CentralArrangement::create(3, std::move(normals));
    } catch (const NotGeneric&) {
        return std::nullopt;
    } catch (const ZeroNormal&) {
        return std::nullopt;
    }
}

}  // namespace

FalkExample falk() {
    const std::vector<Vec> first_four{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    // W = span{a1 x a2, a3 x a4}; a5 x a6 lies in W iff a6 . (w x a5) = 0
    // where w is the normal of W.
    const Vec w = cross3(cross3(first_four[0], first_four[1]), cross3(first_four[2], first_four[3]));

    TSet T(6, 3, {IndexSet{0, 1, 2, 3}, IndexSet{0, 1, 4, 5}, IndexSet{2, 3, 4, 5}});
    for (long x = 1; x <= 4; ++x) {
        for (long y = 1; y <= 4; ++y) {
            for (long z = 1; z <= 4; ++z) {
                const Vec a5{x, y, z};
                const Vec constraint = cross3(w, a5);
                if (is_zero(constraint)) continue;
                const Subspace plane = kernel_basis(Mat::from_rows({constraint}, 3));
                const Vec b1 = plane.basis_vector(0);
                const Vec b2 = plane.basis_vector(1);
                for (long u = -3; u <= 3; ++u) {
                    for (long v = -3; v <= 3; ++v) {
                        Vec a6(3);
                        for (std::size_t c = 0; c < 3; ++c) a6[c] = u * b1[c] + v * b2[c];
                        if (auto arr = try_falk(first_four, a5, a6)) return {std::move(*arr), T};
                    }
                }
            }
        }
    }
    throw std::logic_error("falk: no generic candidate found");
}

RandomDraw random_arrangement_draw(std::size_t n, std::size_t k, Seed seed, std::int64_t coeff_bound) {
    if (k < 1 || k >= n) throw PreconditionError("random_arrangement: need 1 <= k < n");
    if (coeff_bound < 2) throw PreconditionError("random_arrangement: coeff_bound must be at least 2");
    SplitMix64 rng(seed.value);
    std::size_t resamples = 0;
    while (true) {
        std::vector<Vec> normals(n, Vec(k));
        for (auto& row : normals)
            for (auto& x : row) x = rng.uniform(-coeff_bound, coeff_bound);
        try {
            return {CentralArrangement::create(k, std::move(normals)), resamples};
        } catch (const NotGeneric&) {
        } catch (const ZeroNormal&) {
        }
        ++resamples;
    }
}

CentralArrangement random_arrangement(std::size_t n, std::size_t k, Seed seed, std::int64_t coeff_bound) {
    return random_arrangement_draw(n, k, seed, coeff_bound).arrangement;
}

}  // namespace discrimlab
