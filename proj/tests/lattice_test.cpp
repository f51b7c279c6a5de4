#include "discrimlab/catalog.hpp"
#include "discrimlab/lattice.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace discrimlab {
namespace {

using testing::fam;
using testing::ix;

std::size_t raw_sum(const SetFamily& f) {
    std::size_t s = 0;
    for (auto S : f.members()) s += S.size() - f.k();
    return s;
}

TEST(Athanasiadis, Examples) {
    EXPECT_TRUE(athanasiadis_condition(SetFamily(6, 2, fam({{1, 2, 3}}))));
    EXPECT_TRUE(athanasiadis_condition(SetFamily(6, 2, fam({{1, 2, 3}, {4, 5, 6}}))));
    EXPECT_FALSE(athanasiadis_condition(SetFamily(6, 2, fam({{1, 2, 3, 4}, {3, 4, 5, 6}}))));
}

TEST(Athanasiadis, FamilyValidation) {
    EXPECT_THROW(SetFamily(6, 2, fam({{1, 2}})), PreconditionError);
    EXPECT_THROW(SetFamily(6, 2, fam({{1, 2, 7}})), PreconditionError);
    EXPECT_THROW(SetFamily(6, 2, fam({{1, 2, 3}, {1, 2, 3}})), PreconditionError);
}

TEST(ExpectedRank, Examples) {
    EXPECT_EQ(expected_rank(SetFamily(6, 2, fam({{1, 2, 3}}))), 1U);
    EXPECT_EQ(expected_rank(SetFamily(6, 2, fam({{1, 2, 3}, {4, 5, 6}}))), 2U);
    EXPECT_THROW(expected_rank(SetFamily(6, 2, fam({{1, 2, 3, 4}, {3, 4, 5, 6}}))), PreconditionError);
}

// Both configurations cover [6] with total excess |[6]| - k, so the condition
// fails at I = [m] and the rank formula does not apply; the raw sums are 4
// and 3 all the same.
TEST(ExpectedRank, CrapoAndFalkFamiliesViolateTheCondition) {
    const SetFamily c(6, 2, fam({{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}}));
    EXPECT_FALSE(athanasiadis_condition(c));
    EXPECT_EQ(raw_sum(c), 4U);
    EXPECT_THROW(expected_rank(c), PreconditionError);

    const SetFamily f(6, 3, fam({{1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}}));
    EXPECT_FALSE(athanasiadis_condition(f));
    EXPECT_EQ(raw_sum(f), 3U);
    EXPECT_THROW(expected_rank(f), PreconditionError);
}

TEST(Athanasiadis, TransversalRankOnVeryGenericDraws) {
    // Where the condition holds, a random arrangement realizes the sum.
    SplitMix64 rng(51);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto a = random_arrangement(7, 2, Seed{seed});
        DiscriminantalArrangement d(a);
        int checked = 0;
        for (int trial = 0; trial < 200 && checked < 30; ++trial) {
            const auto m = static_cast<std::size_t>(rng.uniform(1, 3));
            Family members;
            for (std::size_t i = 0; i < m; ++i) {
                IndexSet S;
                const auto size = static_cast<std::size_t>(rng.uniform(3, 4));
                while (S.size() < size) S = S.with(static_cast<std::size_t>(rng.uniform(0, 6)));
                if (std::find(members.begin(), members.end(), S) == members.end()) members.push_back(S);
            }
            const SetFamily f(7, 2, members);
            if (!athanasiadis_condition(f)) continue;
            ++checked;
            EXPECT_EQ(flat_of(d, members).rank, expected_rank(f)) << to_string(members);
        }
        EXPECT_GT(checked, 0);
    }
}

TEST(Athanasiadis, AntitoneUnderOverlap) {
    SplitMix64 rng(52);
    const std::size_t n = 8, k = 2;
    int moves = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto m = static_cast<std::size_t>(rng.uniform(2, 4));
        Family members;
        for (std::size_t i = 0; i < m; ++i) {
            IndexSet S;
            const auto size = static_cast<std::size_t>(rng.uniform(3, 5));
            while (S.size() < size) S = S.with(static_cast<std::size_t>(rng.uniform(0, n - 1)));
            members.push_back(S);
        }
        std::sort(members.begin(), members.end());
        if (std::adjacent_find(members.begin(), members.end()) != members.end()) continue;
        const bool before = athanasiadis_condition(SetFamily(n, k, members));

        // add to S_i an element that already lies in some other member
        const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m) - 1));
        const IndexSet others = [&] {
            IndexSet u;
            for (std::size_t j = 0; j < m; ++j)
                if (j != i) u = u | members[j];
            return u;
        }();
        const auto candidates = (others - members[i]).elements();
        if (candidates.empty()) continue;
        Family grown = members;
        grown[i] = grown[i].with(candidates[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(candidates.size()) - 1))]);
        if (std::count(grown.begin(), grown.end(), grown[i]) > 1) continue;
        ++moves;
        const bool after = athanasiadis_condition(SetFamily(n, k, grown));
        EXPECT_FALSE(!before && after) << to_string(members) << " -> " << to_string(grown);
    }
    EXPECT_GT(moves, 100);
}

TEST(Verdict, Crapo) {
    const auto c = crapo();
    const Verdict v = very_generic_upto(c.arrangement, 4);
    ASSERT_TRUE(v.defect_found());
    EXPECT_EQ(canonical(*v.witness), canonical(c.T.members()));
    EXPECT_EQ(v.rank, 3U);
}

TEST(Verdict, Falk) {
    const auto f = falk();
    const Verdict v = very_generic_upto(f.arrangement, 3);
    ASSERT_TRUE(v.defect_found());
    EXPECT_EQ(v.witness->size(), 3U);
    EXPECT_EQ(v.rank, 2U);
    EXPECT_TRUE(is_simple(f.arrangement, *v.witness));
}

TEST(Verdict, PairsNeverWitness) {
    for (const auto& a : {crapo().arrangement, falk().arrangement, braid(5), random_arrangement(7, 3, Seed{9})})
        EXPECT_FALSE(very_generic_upto(a, 2).defect_found());
}

TEST(Verdict, JobsDoNotChangeTheWitness) {
    const auto c = crapo();
    const Verdict one = very_generic_upto(c.arrangement, 4, 1);
    const Verdict four = very_generic_upto(c.arrangement, 4, 4);
    EXPECT_EQ(one.witness, four.witness);
    EXPECT_EQ(one.rank, four.rank);
}

TEST(Verdict, SimpleFamiliesAreTransversalOnRandomDraws) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        DiscriminantalArrangement d(random_arrangement(6, 2, Seed{seed}));
        std::size_t simple = 0;
        for_each_simple_family(d, 4, [&](const Family& T, std::size_t r) {
            ++simple;
            EXPECT_EQ(r, T.size()) << "seed " << seed << " " << to_string(T);
            return true;
        });
        EXPECT_GT(simple, 0U);
        EXPECT_FALSE(very_generic_upto(d, 4).defect_found()) << "seed " << seed;
    }
}

}  // namespace
}  // namespace discrimlab
