#include "dyckres/enumeration.hpp"

#include "oracles/brute_patterns.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace dyckres;

namespace {

std::vector<Partition> shapes_of(const std::vector<PatternEntry>& entries)
{
    std::vector<Partition> out;
    for (const auto& e : entries)
        out.push_back(e.shape);
    return out;
}

std::vector<oracle::BrutePattern> as_brute(const std::vector<PatternEntry>& entries)
{
    std::vector<oracle::BrutePattern> out;
    for (const auto& e : entries) {
        oracle::BrutePattern bp;
        bp.shape.assign(e.shape.parts().begin(), e.shape.parts().end());
        bp.d = e.size.dyck;
        bp.b = e.size.bullet;
        for (const DyckPath& p : e.pattern.paths()) {
            oracle::Path q;
            for (Box b : p.boxes())
                q.emplace_back(b.x, b.y);
            bp.paths.push_back(q);
        }
        std::sort(bp.paths.begin(), bp.paths.end());
        out.push_back(bp);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The test box used by the property suites.
std::vector<std::pair<Partition, int>> test_box()
{
    std::vector<std::pair<Partition, int>> out;
    for (int n = 1; n <= 3; ++n)
        for (const Partition& l : partitions_in_box(n, 4))
            out.emplace_back(l, n);
    return out;
}

} // namespace

TEST(EnumerateK, ThreeTwoInThreeRows)
{
    const auto entries = enumerate_K(Partition{3, 2}, 3);
    ASSERT_EQ(entries.size(), 10u);
    std::vector<Partition> got = shapes_of(entries);
    std::sort(got.begin(), got.end());
    std::vector<Partition> expected{{3, 2}, {4, 2}, {3, 3}, {3, 2, 1}, {4, 3}, {3, 3, 1}, {4, 2, 1}, {4, 3, 1}, {4, 4}, {4, 4, 1}};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected);
    for (const auto& e : entries)
        EXPECT_EQ(e.size.bullet, 0);
}

TEST(EnumerateK, SmallCases)
{
    EXPECT_EQ(shapes_of(enumerate_K(Partition{}, 1)), (std::vector<Partition>{Partition{}, Partition{1}}));
    std::vector<Partition> got = shapes_of(enumerate_K(Partition{1}, 2));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, (std::vector<Partition>{{1}, {1, 1}, {2}, {2, 1}, {2, 2}}));
}

TEST(EnumerateA, ThreeTwoInThreeRows)
{
    const auto entries = enumerate_A(Partition{3, 2}, 3);
    ASSERT_EQ(entries.size(), 5u);
    struct Expect {
        Partition shape;
        int d, b;
    };
    const std::vector<Expect> expected{{{3, 2}, 0, 0}, {{4, 4}, 3, 0}, {{3, 3, 3}, 3, 1}, {{4, 4, 3}, 5, 1}, {{5, 5, 5}, 8, 2}};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(entries[i].shape, expected[i].shape);
        EXPECT_EQ(entries[i].size.dyck, expected[i].d);
        EXPECT_EQ(entries[i].size.bullet, expected[i].b);
    }
}

TEST(EnumerateA, EmptyLambda)
{
    const auto entries = enumerate_A(Partition{}, 2);
    ASSERT_EQ(entries.size(), 1u);
    EXPECT_TRUE(entries[0].pattern.empty());
    EXPECT_EQ(entries[0].shape, Partition{});
}

TEST(EnumerateA, OneBoxInOneRow)
{
    const auto entries = enumerate_A(Partition{1}, 1);
    ASSERT_EQ(entries.size(), 1u);
    EXPECT_TRUE(entries[0].pattern.empty());
}

TEST(EnumerateA0, ThreeTwo)
{
    EXPECT_EQ(shapes_of(enumerate_A0(Partition{3, 2}, 3)), (std::vector<Partition>{{3, 2}, {4, 4}}));
    EXPECT_EQ(shapes_of(enumerate_A0(Partition{1}, 2)), (std::vector<Partition>{{1}, {2, 2}}));
}

TEST(Enumerate, Errors)
{
    EXPECT_THROW(enumerate_K(Partition{1, 1, 1}, 2), TooManyRows);
    EXPECT_THROW(enumerate_A(Partition{1}, 0), BadArgs);
    EXPECT_THROW(enumerate_A(Partition{1}, 2, -1), BadArgs);
}

TEST(Enumerate, EveryEntryAdmissibleDistinctAndConsistent)
{
    for (const auto& [l, n] : test_box())
        for (PatternSet set : {PatternSet::K, PatternSet::A, PatternSet::A0}) {
            const auto entries = enumerate(l, n, set);
            std::set<std::vector<Box>> seen;
            for (const auto& e : entries) {
                EXPECT_TRUE(is_admissible(l, e.pattern)) << to_string(l) << " " << to_string(set);
                EXPECT_EQ(lambda_of(l, e.pattern).shape, e.shape);
                EXPECT_LE(e.shape.length(), n);
                EXPECT_EQ(e.shape.size(), l.size() + e.size.total);
                EXPECT_TRUE(seen.insert(e.pattern.support()).second) << "duplicate pattern";
                if (set != PatternSet::A) {
                    EXPECT_EQ(e.size.bullet, 0);
                }
                if (set != PatternSet::K && !e.pattern.empty()) {
                    EXPECT_GE(e.pattern.min_path_length(), 3);
                }
            }
            EXPECT_TRUE(std::is_sorted(entries.begin(), entries.end(), entry_less));
        }
}

TEST(Enumerate, MatchesBruteForce)
{
    for (int n = 1; n <= 3; ++n)
        for (const Partition& l : partitions_in_box(std::min(n, 2), 3)) {
            const std::vector<int> lv(l.parts().begin(), l.parts().end());
            const SearchRegion region = SearchRegion::for_lambda(l, n);
            for (auto [set, fam] : {std::pair{PatternSet::K, oracle::Family::K}, std::pair{PatternSet::A, oracle::Family::A},
                     std::pair{PatternSet::A0, oracle::Family::A0}}) {
                const auto brute = oracle::brute_enumerate(lv, region.max_row, region.max_col, fam);
                EXPECT_EQ(as_brute(enumerate(l, n, set)), brute) << to_string(l) << " n=" << n << " " << to_string(set);
            }
        }
}

TEST(Enumerate, FirstStrandSetsAgree)
{
    for (const auto& [l, n] : test_box()) {
        const auto a0 = enumerate_A0(l, n);
        std::vector<PatternEntry> a_no_bullets, k_long;
        for (const auto& e : enumerate_A(l, n))
            if (e.size.bullet == 0)
                a_no_bullets.push_back(e);
        for (const auto& e : enumerate_K(l, n))
            if (e.pattern.empty() || e.pattern.min_path_length() >= 3)
                k_long.push_back(e);
        EXPECT_EQ(a0, a_no_bullets) << to_string(l) << " n=" << n;
        EXPECT_EQ(a0, k_long) << to_string(l) << " n=" << n;
    }
}

TEST(Enumerate, SlackDoesNotChangeResults)
{
    for (const auto& [l, n] : test_box())
        for (PatternSet set : {PatternSet::K, PatternSet::A})
            EXPECT_EQ(enumerate(l, n, set, 0), enumerate(l, n, set, 2)) << to_string(l) << " n=" << n;
}

TEST(Enumerate, JobsDoNotChangeResults)
{
    for (const Partition& l : {Partition{3, 2}, Partition{2, 1}, Partition{4, 4, 1}})
        EXPECT_EQ(enumerate_A(l, 3, 0, 1), enumerate_A(l, 3, 0, 4));
}

TEST(CandidatePaths, AreDyckAndOutsideLambda)
{
    const Partition l{3, 2};
    const SearchRegion region = SearchRegion::for_lambda(l, 3);
    const auto paths = enumerate_candidate_paths(l, region, 1);
    EXPECT_FALSE(paths.empty());
    for (const DyckPath& p : paths)
        for (Box b : p.boxes()) {
            EXPECT_FALSE(l.contains_box(b));
            EXPECT_TRUE(region.contains(b));
        }
    for (const DyckPath& p : enumerate_candidate_paths(l, region, 3))
        EXPECT_GE(p.length(), 3);
}

TEST(CornerHook, ThreeTwo)
{
    const PatternEntry e = corner_hook_pattern(Partition{3, 2}, 3, 1);
    EXPECT_EQ(e.shape, (Partition{5, 5, 5}));
    EXPECT_EQ(e.size.dyck, 8);
    EXPECT_EQ(e.size.bullet, 2);
    const PatternEntry last = corner_hook_pattern(Partition{3, 2}, 3, 3);
    EXPECT_TRUE(last.pattern.empty());
    EXPECT_THROW(corner_hook_pattern(Partition{3, 3}, 3, 1), NotACorner);
    EXPECT_THROW(corner_hook_pattern(Partition{3, 2}, 3, 4), BadArgs);
    EXPECT_THROW(corner_hook_pattern(Partition{1, 1, 1, 1}, 3, 1), TooManyRows);
}

TEST(CornerHook, AttainsClosedFormInEqualityCase)
{
    for (int n = 1; n <= 4; ++n)
        for (const Partition& l : partitions_in_box(n, 5))
            for (int p = 1; p <= n; ++p) {
                const int next = p == n ? -1 : l.part(p + 1);
                if (l.part(p) <= next)
                    continue;
                bool equality_case = true;
                for (int j = 1; j < p; ++j)
                    equality_case = equality_case && l.part(j) <= l.part(p) + (n - p);
                if (!equality_case)
                    continue;
                const PatternEntry e = corner_hook_pattern(l, n, p);
                EXPECT_EQ(l.size() + e.size.bullet, n * l.part(p) + (p - 2) * (n - p)) << to_string(l) << " n=" << n << " p=" << p;
            }
}
