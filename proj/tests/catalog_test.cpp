#include "discrimlab/catalog.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

namespace discrimlab {
namespace {

using testing::fam;
using testing::vec;

TEST(SplitMix64, ReferenceStream) {
    // first outputs for seed 0 and 1234567 from the published reference code
    SplitMix64 zero(0);
    EXPECT_EQ(zero.next(), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(zero.next(), 0x6e789e6aa1b965f4ULL);
    SplitMix64 r(1234567);
    EXPECT_EQ(r.next(), 6457827717110365317ULL);
    EXPECT_EQ(r.next(), 3203168211198807973ULL);
}

TEST(SplitMix64, UniformStaysInRange) {
    SplitMix64 rng(5);
    std::set<std::int64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const auto x = rng.uniform(-3, 3);
        EXPECT_GE(x, -3);
        EXPECT_LE(x, 3);
        seen.insert(x);
    }
    EXPECT_EQ(seen.size(), 7U);
    EXPECT_THROW(rng.uniform(2, 1), PreconditionError);
}

TEST(Braid, Shape) {
    const auto b = braid(3);
    EXPECT_EQ(b.n(), 3U);
    EXPECT_EQ(b.k(), 1U);
    for (const auto& a : b.normals()) EXPECT_EQ(a, vec({1}));
    DiscriminantalArrangement d(b);
    ASSERT_EQ(d.hyperplanes().size(), 3U);
    std::vector<Vec> rows;
    for (const auto& h : d.hyperplanes()) rows.push_back(h.coeffs);
    EXPECT_EQ(rows, (std::vector<Vec>{vec({1, -1, 0}), vec({1, 0, -1}), vec({0, 1, -1})}));
    EXPECT_EQ(rank(Mat::from_rows(rows, 3)), 2U);
    EXPECT_THROW(braid(1), PreconditionError);
}

TEST(Quadrilateral, CrapoInstance) {
    const auto c = crapo();
    EXPECT_EQ(c.arrangement.n(), 6U);
    EXPECT_EQ(c.arrangement.k(), 2U);
    EXPECT_EQ(c.T.members(), fam({{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}}));
    EXPECT_TRUE(is_r_set(c.T));
    EXPECT_EQ(flat_of(c.arrangement, c.T.members()).rank, 3U);
}

TEST(Quadrilateral, CollinearTripleRejected) {
    EXPECT_THROW(quadrilateral({vec({0, 0}), vec({1, 1}), vec({2, 2}), vec({0, 5})}), PreconditionError);
}

// The four advertised triples are exactly the concurrent triples of the
// original lines.
void expect_quadrilateral_invariant(const QuadrilateralExample& q, const std::array<Vec, 4>& pts) {
    const auto& a = q.arrangement;
    std::set<std::uint64_t> advertised;
    for (auto L : q.T.members()) advertised.insert(L.mask());
    for (auto L : subsets_of_size(6, 3)) {
        const bool concurrent = common_point(a, q.translate, L).has_value();
        EXPECT_EQ(in_DL(a, q.translate, L), concurrent);
        EXPECT_EQ(concurrent, advertised.count(L.mask()) == 1) << L.to_string();
    }
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(*common_point(a, q.translate, q.T[i]), pts[i]);
}

TEST(Quadrilateral, TriplesAreTheConcurrences) {
    const std::array<Vec, 4> crapo_pts{vec({0, 0}), vec({4, 0}), vec({3, 4}), vec({1, 3})};
    expect_quadrilateral_invariant(crapo(), crapo_pts);

    SplitMix64 rng(71);
    int built = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::array<Vec, 4> pts;
        for (auto& p : pts) p = {testing::random_rational(rng, 9), testing::random_rational(rng, 9)};
        try {
            const auto q = quadrilateral(pts);
            expect_quadrilateral_invariant(q, pts);
            EXPECT_EQ(flat_of(q.arrangement, q.T.members()).rank, 3U);
            ++built;
        } catch (const PreconditionError&) {
        } catch (const NotGeneric&) {
        }
    }
    EXPECT_GT(built, 20);
}

Vec cross(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

TEST(Falk, Invariants) {
    const auto f = falk();
    const auto& a = f.arrangement;
    EXPECT_EQ(a.n(), 6U);
    EXPECT_EQ(a.k(), 3U);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(a.normal(i), (std::vector<Vec>{vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 1, 1})}[i]));
    EXPECT_EQ(rank(Mat::from_rows({cross(a.normal(0), a.normal(1)), cross(a.normal(2), a.normal(3)),
                                   cross(a.normal(4), a.normal(5))},
                                  3)),
              2U);
    const auto& T = f.T;
    EXPECT_EQ(T.members(), fam({{1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) EXPECT_EQ((T[i] & T[j]).size(), 2U);
    EXPECT_EQ(family_union(T.members()).size(), 6U);
    EXPECT_EQ(flat_of(a, T.members()).rank, 2U);
    EXPECT_TRUE(ls_dependency_check(a, T));
}

TEST(Falk, FirstCandidateOfTheRecipe) {
    // a6 = (1,1,0) lies in the plane of a1, a2, so the recipe moves on
    EXPECT_THROW(CentralArrangement::create(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 1, 1}),
                                                vec({1, 2, 3}), vec({1, 1, 0})}),
                 NotGeneric);
    EXPECT_EQ(falk().arrangement.normal(4), vec({1, 2, 3}));
    EXPECT_EQ(falk().arrangement.normal(5), vec({-3, -2, 3}));
    EXPECT_EQ(falk().arrangement, falk().arrangement);
}

TEST(Random, DeterministicPerSeed) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto a = random_arrangement(6, 2, Seed{seed});
        EXPECT_EQ(a, random_arrangement(6, 2, Seed{seed}));
        for (const auto& nrm : a.normals())
            for (const auto& x : nrm) {
                EXPECT_EQ(x.get_den(), 1);
                EXPECT_LE(abs(x), 100);
            }
    }
    EXPECT_NE(random_arrangement(6, 2, Seed{1}), random_arrangement(6, 2, Seed{2}));
}

TEST(Random, SeedOneNormals) {
    const auto a = random_arrangement(6, 2, Seed{1});
    EXPECT_EQ(a.normals(), (std::vector<Vec>{vec({-53, -93}), vec({-37, -2}), vec({-79, -17}), vec({-19, 68}),
                                            vec({8, 66}), vec({-22, 33})}));
}

TEST(Random, ResamplesUntilGeneric) {
    // with bound 2 and many hyperplanes, bad draws are frequent
    std::size_t total = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto draw = random_arrangement_draw(5, 2, Seed{seed}, 2);
        total += draw.resamples;
        EXPECT_NO_THROW(CentralArrangement::create(2, draw.arrangement.normals()));
    }
    EXPECT_GT(total, 0U);
}

TEST(Random, Preconditions) {
    EXPECT_THROW(random_arrangement(3, 3, Seed{1}), PreconditionError);
    EXPECT_THROW(random_arrangement(5, 2, Seed{1}, 1), PreconditionError);
}

}  // namespace
}  // namespace discrimlab
