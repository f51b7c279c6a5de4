#include "discrimlab/catalog.hpp"
#include "discrimlab/discriminantal.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <map>

namespace discrimlab {
namespace {

using testing::fam;
using testing::ix;
using testing::vec;

CentralArrangement triangle() { return CentralArrangement::create(2, {vec({1, 0}), vec({0, 1}), vec({1, 1})}); }

std::vector<CentralArrangement> test_arrangements() {
    std::vector<CentralArrangement> out{crapo().arrangement, falk().arrangement, braid(4), braid(5)};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) out.push_back(random_arrangement(6, 2, Seed{seed}));
    return out;
}

TEST(DiscNormal, BraidHyperplanes) {
    const auto a = braid(3);
    EXPECT_EQ(disc_normal(a, ix({1, 2})).coeffs, vec({1, -1, 0}));
    EXPECT_EQ(disc_normal(a, ix({1, 3})).coeffs, vec({1, 0, -1}));
    EXPECT_EQ(disc_normal(a, ix({2, 3})).coeffs, vec({0, 1, -1}));
}

TEST(DiscNormal, TriangleExample) { EXPECT_EQ(disc_normal(triangle(), ix({1, 2, 3})).coeffs, vec({1, 1, -1})); }

TEST(DiscNormal, WrongSize) {
    EXPECT_THROW(disc_normal(triangle(), ix({1, 2})), PreconditionError);
    EXPECT_THROW(disc_normal(braid(3), ix({1, 2, 3})), PreconditionError);
}

TEST(DiscNormal, SupportIsExactlyL) {
    for (const auto& a : test_arrangements()) {
        for (auto L : subsets_of_size(a.n(), a.k() + 1)) {
            const auto dn = disc_normal(a, L);
            for (std::size_t i = 0; i < a.n(); ++i) EXPECT_EQ(dn.coeffs[i] != 0, L.contains(i));
            EXPECT_GT(dn.coeffs[L.elements().front()], 0);
        }
    }
}

TEST(DiscNormal, OrthogonalToCentralTranslates) {
    for (const auto& a : test_arrangements()) {
        const Subspace c = central_subspace(a);
        for (auto L : subsets_of_size(a.n(), a.k() + 1)) {
            const auto dn = disc_normal(a, L);
            for (std::size_t i = 0; i < c.dim(); ++i) EXPECT_EQ(dot(dn.coeffs, c.basis_vector(i)), 0);
        }
        DiscriminantalArrangement d(a);
        std::vector<Vec> all;
        for (const auto& h : d.hyperplanes()) all.push_back(h.coeffs);
        EXPECT_LE(rank(Mat::from_rows(all, a.n())), a.n() - a.k());
    }
}

TEST(DiscNormal, Deterministic) {
    const auto a = crapo().arrangement;
    for (auto L : subsets_of_size(6, 3)) EXPECT_EQ(disc_normal(a, L), disc_normal(a, L));
    DiscriminantalArrangement d1(a), d2(a);
    EXPECT_EQ(d1.hyperplanes(), d2.hyperplanes());
}

TEST(InDL, Examples) {
    const auto a = triangle();
    EXPECT_TRUE(in_DL(a, Translate{vec({0, 0, 0})}, ix({1, 2, 3})));
    EXPECT_TRUE(in_DL(a, Translate{vec({1, 1, 2})}, ix({1, 2, 3})));
    EXPECT_FALSE(in_DL(a, Translate{vec({1, 1, 3})}, ix({1, 2, 3})));
}

TEST(InDL, AgreesWithCommonPoint) {
    SplitMix64 rng(31);
    for (const auto& a : test_arrangements()) {
        const auto Ls = subsets_of_size(a.n(), a.k() + 1);
        for (int trial = 0; trial < 200; ++trial) {
            const IndexSet L = Ls[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(Ls.size()) - 1))];
            Translate t{Vec(a.n())};
            for (auto& x : t.values) x = testing::random_rational(rng, 6);
            // Half the trials are projected onto D_L by re-solving one coordinate.
            if (trial % 2 == 0) {
                const auto dn = disc_normal(a, L);
                const std::size_t p = L.elements().back();
                Rational rest = 0;
                for (std::size_t i = 0; i < a.n(); ++i)
                    if (i != p) rest += dn.coeffs[i] * t.values[i];
                t.values[p] = -rest / dn.coeffs[p];
            }
            EXPECT_EQ(in_DL(a, t, L), common_point(a, t, L).has_value());
        }
    }
}

TEST(Flat, Examples) {
    const auto a = triangle();
    EXPECT_EQ(flat_of(a, {ix({1, 2, 3})}).rank, 1U);

    const auto r = random_arrangement(5, 2, Seed{3});
    EXPECT_EQ(flat_of(r, {ix({1, 2, 3, 4})}).rank, 2U);

    const auto c = crapo();
    EXPECT_EQ(flat_of(c.arrangement, c.T.members()).rank, 3U);
    EXPECT_THROW(flat_of(a, {ix({1, 2})}), PreconditionError);
}

TEST(Flat, DSRankIsSizeMinusK) {
    for (const auto& a : test_arrangements()) {
        DiscriminantalArrangement d(a);
        for (std::size_t m = a.k() + 1; m <= a.n(); ++m) {
            for (auto S : subsets_of_size(a.n(), m)) {
                const Flat f = flat_of(d, {S});
                EXPECT_EQ(f.rank, m - a.k()) << "S = " << S.to_string();
                EXPECT_EQ(f.subspace.dim(), a.n() - f.rank);
                EXPECT_TRUE(contains(f.subspace, central_subspace(a)));
            }
        }
    }
}

TEST(Simplicity, Examples) {
    const auto r = random_arrangement(6, 2, Seed{1});
    EXPECT_FALSE(is_simple(r, fam({{1, 2, 3}, {1, 2, 4}})));

    const auto c = crapo();
    EXPECT_TRUE(is_simple(c.arrangement, c.T.members()));
    const auto f = falk();
    EXPECT_TRUE(is_simple(f.arrangement, f.T.members()));
}

// Brute force over every I and every S with |S| > k+1, not just the
// supersets of the sub-union.
bool simple_oracle(const CentralArrangement& a, const Family& T) {
    const std::size_t r = T.size();
    for (std::uint64_t I = 1; I < (1ULL << r); ++I) {
        if (std::popcount(I) < 2) continue;
        Family sub;
        for (std::size_t i = 0; i < r; ++i)
            if ((I >> i) & 1U) sub.push_back(T[i]);
        const Subspace x = flat_of(a, sub).subspace;
        for (std::size_t m = a.k() + 2; m <= a.n(); ++m)
            for (auto S : subsets_of_size(a.n(), m))
                if (subspace_equal(x, flat_of(a, {S}).subspace)) return false;
    }
    return true;
}

TEST(Simplicity, AgreesWithBruteForce) {
    SplitMix64 rng(41);
    std::vector<CentralArrangement> arrs{crapo().arrangement, random_arrangement(6, 2, Seed{2})};
    for (const auto& a : arrs) {
        const auto Ls = subsets_of_size(a.n(), a.k() + 1);
        for (int trial = 0; trial < 40; ++trial) {
            const auto r = static_cast<std::size_t>(rng.uniform(2, 4));
            Family T;
            while (T.size() < r) {
                const IndexSet L = Ls[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(Ls.size()) - 1))];
                if (std::find(T.begin(), T.end(), L) == T.end()) T.push_back(L);
            }
            EXPECT_EQ(is_simple(a, T), simple_oracle(a, T)) << to_string(T);
        }
    }
}

TEST(Census, BraidFour) {
    const auto census = rank2_census(braid(4));
    std::map<std::size_t, std::size_t> by_mult;
    for (const auto& e : census) ++by_mult[e.multiplicity()];
    EXPECT_EQ(by_mult, (std::map<std::size_t, std::size_t>{{2, 3}, {3, 4}}));

    // t_1 = t_2 = t_3
    const Subspace triple = Subspace::span_of(testing::mat({{1, -1, 0, 0}, {0, 1, -1, 0}}));
    bool found = false;
    for (const auto& e : census) {
        if (subspace_equal(e.normal_span, triple)) {
            found = true;
            EXPECT_EQ(e.members, fam({{1, 2}, {1, 3}, {2, 3}}));
        }
    }
    EXPECT_TRUE(found);
}

TEST(Census, CoversEveryPairOnce) {
    for (const auto& a : {crapo().arrangement, falk().arrangement, braid(5)}) {
        const auto census = rank2_census(a);
        const std::size_t h = subsets_of_size(a.n(), a.k() + 1).size();
        std::size_t pairs = 0;
        for (const auto& e : census) {
            EXPECT_EQ(e.normal_span.dim(), 2U);
            EXPECT_GE(e.multiplicity(), 2U);
            pairs += e.multiplicity() * (e.multiplicity() - 1) / 2;
            for (auto L : e.members) EXPECT_TRUE(in_span(disc_normal(a, L).coeffs, e.normal_span));
        }
        EXPECT_EQ(pairs, h * (h - 1) / 2);
    }
}

TEST(Census, VeryGenericMultiplicities) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        for (const auto& agg : aggregate(rank2_census(random_arrangement(6, 2, Seed{seed}))))
            EXPECT_TRUE(agg.multiplicity == 2 || agg.multiplicity == 4) << "seed " << seed;
    }
}

TEST(Census, FalkHasMultiplicityThree) {
    const auto census = rank2_census(falk().arrangement);
    bool found = false;
    for (const auto& e : census) {
        if (e.multiplicity() == 3) {
            found = true;
            // a triple stratum is never a D_S, so its members are not all inside one 5-set
            EXPECT_GT(family_union(e.members).size(), 5U);
        }
    }
    EXPECT_TRUE(found);
}

}  // namespace
}  // namespace discrimlab
