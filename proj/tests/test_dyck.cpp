#include "dyckres/dyck.hpp"

#include <gtest/gtest.h>

using namespace dyckres;

namespace {

DyckPath path(std::vector<Box> bs) { return DyckPath::from_boxes(std::move(bs)); }

const Partition kLambda{4, 2, 2, 1};

// Shared hook (2,4)(3,4)(3,3) used by several of the pictures.
DyckPath small_hook() { return path({{2, 4}, {3, 4}, {3, 3}}); }

} // namespace

TEST(DyckPath, ValidPaths)
{
    const DyckPath p = path({{2, 5}, {3, 5}, {4, 5}, {4, 4}, {4, 3}});
    EXPECT_EQ(p.length(), 5);
    EXPECT_EQ(p.level(), 7);
    EXPECT_EQ(p.start(), (Box{2, 5}));
    EXPECT_EQ(p.end(), (Box{4, 3}));
    EXPECT_EQ(p.steps(), (std::vector<Step>{Step::East, Step::East, Step::South, Step::South}));
    EXPECT_EQ(path({{3, 1}}).length(), 1);
}

TEST(DyckPath, InvalidPaths)
{
    EXPECT_THROW(path({}), NotDyck);
    EXPECT_THROW(path({{1, 1}, {2, 1}}), NotDyck);         // endpoints on different levels
    EXPECT_THROW(path({{1, 2}, {1, 1}, {2, 1}}), NotDyck); // dips below its level
    EXPECT_THROW(path({{1, 1}, {3, 1}}), NotDyck);         // not a unit step
    EXPECT_THROW(path({{0, 1}}), NotDyck);
}

TEST(DyckPath, LengthIsOdd)
{
    for (int x = 1; x <= 3; ++x)
        for (int y = 4; y <= 6; ++y) {
            std::vector<Step> steps;
            for (int k = 0; k < 3; ++k) {
                steps.push_back(Step::East);
                steps.push_back(Step::South);
            }
            EXPECT_EQ(make_dyck_path({x, y}, steps).length() % 2, 1);
        }
}

TEST(DyckPath, FromSteps)
{
    const DyckPath p = make_dyck_path({3, 2}, {Step::East, Step::South});
    EXPECT_EQ(p, path({{3, 2}, {4, 2}, {4, 1}}));
    EXPECT_THROW(make_dyck_path({1, 1}, {Step::South}), NotDyck);
}

TEST(Admissible, FirstPicture)
{
    const DyckPattern d({small_hook(), path({{2, 5}, {3, 5}, {4, 5}, {4, 4}, {4, 3}})}, {{3, 2}, {4, 2}, {1, 5}});
    EXPECT_TRUE(is_admissible(kLambda, d)) << check_admissible(kLambda, d).reason();
    EXPECT_EQ(d, derive_pattern(kLambda, {small_hook(), path({{2, 5}, {3, 5}, {4, 5}, {4, 4}, {4, 3}})}));
    EXPECT_EQ(lambda_of(kLambda, d).shape, (Partition{4, 4, 4, 4, 4}));
    EXPECT_EQ(sizes(d), (PatternSizes{8, 3, 11}));
}

TEST(Admissible, SecondPicture)
{
    const DyckPattern d({small_hook(), path({{1, 5}, {2, 5}, {3, 5}, {4, 5}, {4, 4}, {4, 3}, {4, 2}})}, {{3, 2}});
    EXPECT_TRUE(is_admissible(kLambda, d)) << check_admissible(kLambda, d).reason();
}

TEST(Admissible, ThirdPicture)
{
    const DyckPattern d({small_hook(), path({{1, 5}, {2, 5}, {3, 5}, {4, 5}, {4, 4}, {4, 3}, {4, 2}, {5, 2}, {5, 1}})}, {{3, 2}});
    EXPECT_TRUE(is_admissible(kLambda, d)) << check_admissible(kLambda, d).reason();
    EXPECT_EQ(lambda_of(kLambda, d).shape, (Partition{5, 5, 4, 4, 4}));
}

TEST(Admissible, FourthPicture)
{
    const DyckPattern d({path({{3, 3}, {4, 3}, {4, 2}}), path({{1, 5}, {2, 5}, {2, 4}}), path({{3, 2}}), path({{5, 1}})}, {});
    EXPECT_TRUE(is_admissible(kLambda, d)) << check_admissible(kLambda, d).reason();
    EXPECT_EQ(sizes(d).bullet, 0);
}

TEST(NotAdmissible, FirstPicture)
{
    const DyckPattern d({small_hook(), path({{3, 5}, {4, 5}, {4, 4}})}, {{3, 2}, {4, 2}, {1, 5}, {4, 3}, {2, 5}});
    const Admissibility a = check_admissible(kLambda, d);
    EXPECT_FALSE(a.admissible());
    EXPECT_EQ(a.violation, Violation::NeighborRule);
}

TEST(NotAdmissible, SecondPicture)
{
    const DyckPattern d({small_hook(), path({{2, 5}, {3, 5}, {4, 5}, {4, 4}, {4, 3}}), path({{4, 2}, {5, 2}, {5, 1}})}, {{3, 2}, {1, 5}});
    const Admissibility a = check_admissible(kLambda, d);
    EXPECT_FALSE(a.admissible());
    EXPECT_EQ(a.violation, Violation::NeighborRule);
}

TEST(NotAdmissible, ThirdPicture)
{
    const DyckPattern d({path({{1, 5}, {2, 5}, {2, 4}}), path({{3, 4}, {4, 4}, {5, 4}, {5, 3}, {5, 2}}), path({{3, 3}, {4, 3}, {4, 2}}),
                            path({{3, 2}}), path({{5, 1}})},
        {});
    const Admissibility a = check_admissible(kLambda, d);
    EXPECT_FALSE(a.admissible());
    EXPECT_EQ(a.violation, Violation::NeighborRule);
}

TEST(NotAdmissible, EachCondition)
{
    const Partition l{2};
    // overlapping paths
    EXPECT_EQ(check_admissible(l, DyckPattern({path({{3, 1}}), path({{3, 1}})}, {})).violation, Violation::Overlap);
    // path inside lambda
    EXPECT_EQ(check_admissible(l, DyckPattern({path({{2, 1}})}, {})).violation, Violation::MeetsLambda);
    // hole to the west
    EXPECT_EQ(check_admissible(l, DyckPattern({path({{4, 1}})}, {})).violation, Violation::NotPartition);
    // (1,1) is neither in the head row nor the tail column of (2,2)
    EXPECT_EQ(check_admissible(Partition{}, derive_pattern(Partition{}, {path({{2, 2}})})).violation, Violation::BulletDecomposition);
}

TEST(NotAdmissible, BulletEastOfPath)
{
    // (2,1) is the head bullet of (3,1) but sits directly east of (1,1)
    const DyckPattern d = derive_pattern(Partition{}, {path({{1, 1}}), path({{3, 1}})});
    EXPECT_EQ(d.bullets().size(), 1u);
    EXPECT_EQ(check_admissible(Partition{}, d).violation, Violation::BulletNeighbor);
}

TEST(LambdaOf, RejectsOverlap)
{
    EXPECT_THROW(lambda_of(Partition{2}, std::vector<DyckPath>{path({{2, 1}})}), OverlapError);
    EXPECT_THROW(lambda_of(Partition{}, std::vector<DyckPath>{path({{1, 1}}), path({{1, 1}})}), OverlapError);
}

TEST(LambdaOf, SizeIdentity)
{
    const DyckPattern d = derive_pattern(kLambda, {small_hook(), path({{2, 5}, {3, 5}, {4, 5}, {4, 4}, {4, 3}})});
    EXPECT_EQ(lambda_of(kLambda, d).shape.size(), kLambda.size() + sizes(d).total);
}

TEST(Render, SmallPattern)
{
    const DyckPattern d = derive_pattern(Partition{3, 2}, {path({{3, 2}, {4, 2}, {4, 1}})});
    EXPECT_EQ(render_pattern(Partition{3, 2}, d), "x x #-#\n      |\nx x x #\n");
    EXPECT_EQ(render_pattern(Partition{}, DyckPattern{}), "");
}

TEST(Render, Bullets)
{
    const DyckPattern d = derive_pattern(Partition{3, 2}, {path({{2, 3}, {3, 3}, {3, 2}})});
    EXPECT_EQ(render_pattern(Partition{3, 2}, d), "o #-#\n    |\nx x #\n\nx x x\n");
}
