#include <gtest/gtest.h>

#include "qgl/errors.hpp"
#include "qgl/partition.hpp"

using namespace qgl;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& ps) {
    std::vector<std::vector<int>> out;
    for (const auto& p : ps) out.push_back(p.parts());
    return out;
}

}  // namespace

TEST(Admissible, FiniteShapes) {
    EXPECT_TRUE(is_admissible(std::vector<int>{2, 0}, 1, 2));
    EXPECT_FALSE(is_admissible(std::vector<int>{1, 0}, 1, 2));
    EXPECT_TRUE(is_admissible(std::vector<int>{3, 1, 0}, 2, 3));
    EXPECT_FALSE(is_admissible(std::vector<int>{2, 1, 0}, 2, 3));
}

TEST(Admissible, NotMonotoneUnderAddingBoxes) {
    // (2,0) is (1,2)-admissible while removing the first box breaks it
    EXPECT_TRUE(is_admissible(std::vector<int>{2, 0}, 1, 2));
    EXPECT_FALSE(is_admissible(std::vector<int>{1, 0}, 1, 2));
}

TEST(Tail, Values) {
    TailSpec t{1, 2, {}};
    std::vector<int> got;
    for (int j = 1; j <= 4; ++j) got.push_back(tail_value(t, j));
    EXPECT_EQ(got, (std::vector<int>{0, -2, -4, -6}));

    TailSpec t2{2, 2, {1}};
    got.clear();
    for (int j = 1; j <= 5; ++j) got.push_back(tail_value(t2, j));
    EXPECT_EQ(got, (std::vector<int>{0, -1, -2, -3, -4}));
}

TEST(Tail, PeriodicityAndMonotonicity) {
    for (int k = 1; k <= 3; ++k)
        for (int r = 1; r <= 4; ++r)
            for (const auto& t : all_tail_specs(k, r)) {
                EXPECT_EQ(tail_value(t, 1), 0);
                for (int j = 1; j <= 50; ++j) {
                    EXPECT_GE(tail_value(t, j), tail_value(t, j + 1));
                    EXPECT_EQ(tail_value(t, j) - tail_value(t, j + k), r);
                }
            }
}

TEST(Tail, VacuumIsAdmissible) {
    for (const auto& t : all_tail_specs(2, 3))
        EXPECT_TRUE(is_admissible(Partition::tailed({}, t), t.k, t.r));
}

TEST(Tail, Validation) {
    EXPECT_THROW((TailSpec{2, 2, {3}}.validate()), InvalidInput);
    EXPECT_THROW((TailSpec{3, 2, {1, 0}}.validate()), InvalidInput);
    EXPECT_THROW((TailSpec{2, 2, {}}.validate()), InvalidInput);
    EXPECT_NO_THROW((TailSpec{2, 2, {2}}.validate()));
    EXPECT_EQ(all_tail_specs(2, 2).size(), 3u);
}

TEST(Dominance, Order) {
    EXPECT_TRUE(dominance_leq(std::vector<int>{1, 1}, std::vector<int>{2, 0}));
    EXPECT_TRUE(dominance_leq(std::vector<int>{2, 1}, std::vector<int>{2, 1}));
    EXPECT_FALSE(dominance_leq(std::vector<int>{3, 0}, std::vector<int>{2, 1}));
    EXPECT_THROW(dominance_leq(std::vector<int>{1}, std::vector<int>{2}), InvalidInput);
}

TEST(Enumerate, Nonneg) {
    EXPECT_EQ(parts_of(enumerate_nonneg(3)), (std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}}));
    EXPECT_EQ(enumerate_nonneg_upto(6).size(), 1u + 1 + 2 + 3 + 5 + 7 + 11);
}

TEST(Enumerate, Zvalued) {
    EXPECT_EQ(parts_of(enumerate_zvalued(2, 0, 1)), (std::vector<std::vector<int>>{{0, 0}, {1, 0}, {1, 1}}));
}

TEST(Enumerate, TailedWindow) {
    TailSpec t{1, 2, {}};
    auto ps = enumerate_tailed(t, 1);
    ASSERT_EQ(ps.size(), 2u);
    EXPECT_EQ(ps[0].weight(), 0);
    EXPECT_EQ(ps[1].weight(), 1);
    EXPECT_EQ(ps[1].at(1), 1);
    EXPECT_EQ(ps[1].at(2), -2);
}

TEST(Enumerate, DuplicateFreeAndAdmissible) {
    for (const auto& t : all_tail_specs(2, 3)) {
        auto ps = enumerate_tailed(t, 5);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            EXPECT_TRUE(is_admissible(ps[i], t.k, t.r));
            for (std::size_t j = i + 1; j < ps.size(); ++j) EXPECT_FALSE(ps[i] == ps[j]);
        }
    }
}

TEST(PartitionType, Boxes) {
    Partition p = Partition::nonneg({2, 1, 0});
    EXPECT_EQ(p.parts(), (std::vector<int>{2, 1}));
    EXPECT_FALSE(Partition::nonneg({2, 2}).add_box(2).has_value());
    EXPECT_EQ(p.add_box(2)->parts(), (std::vector<int>{2, 2}));
    EXPECT_EQ(p.add_box(3)->parts(), (std::vector<int>{2, 1, 1}));
    EXPECT_EQ(p.remove_box(2)->parts(), (std::vector<int>{2}));

    Partition z = Partition::zvalued({0, 0});
    EXPECT_FALSE(z.add_box(2).has_value());
    EXPECT_EQ(z.remove_box(2)->parts(), (std::vector<int>{0, -1}));
}

TEST(PartitionType, Json) {
    EXPECT_EQ(Partition::nonneg({3, 1, 1}).to_json().dump(), "[3,1,1]");
    auto j = Partition::tailed({1}, TailSpec{1, 2, {}}).to_json();
    EXPECT_EQ(j["k"], 1);
    EXPECT_EQ(j["r"], 2);
    EXPECT_EQ(Partition::from_json(j, PartitionKind::tailed), Partition::tailed({1}, TailSpec{1, 2, {}}));
}
