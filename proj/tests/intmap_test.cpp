#include <gtest/gtest.h>

#include <map>

#include "scopefoil/intmap.hpp"
#include "support/support.hpp"

using scopefoil::IntMap;

TEST(IntMap, EmptyMapFindsNothing) {
    IntMap<int> map;
    EXPECT_TRUE(map.empty());
    EXPECT_EQ(map.size(), 0u);
    EXPECT_EQ(map.find(0), nullptr);
}

TEST(IntMap, InsertIsPersistent) {
    const IntMap<int> a = IntMap<int>{}.insert(3, 30);
    const IntMap<int> b = a.insert(5, 50);
    const IntMap<int> c = b.insert(3, 31);
    EXPECT_FALSE(a.contains(5));
    EXPECT_EQ(*b.find(3), 30);
    EXPECT_EQ(*c.find(3), 31);
    EXPECT_EQ(b.size(), 2u);
    EXPECT_EQ(c.size(), 2u);
}

TEST(IntMap, CopiesShareTheRoot) {
    const IntMap<int> a = IntMap<int>{}.insert(1, 1);
    const IntMap<int> b = a;
    EXPECT_TRUE(a.same_root(b));
    EXPECT_FALSE(a.same_root(a.insert(2, 2)));
}

TEST(IntMap, HandlesExtremeKeys) {
    const std::uint64_t top = ~std::uint64_t{0};
    const IntMap<int> map = IntMap<int>{}.insert(top, 1).insert(0, 2).insert(top >> 1, 3);
    EXPECT_EQ(map.keys(), (std::vector<std::uint64_t>{0, top >> 1, top}));
}

TEST(IntMap, AgreesWithStdMapOnRandomOperations) {
    scopefoil::testing::Rng rng(11);
    for (int round = 0; round < 50; ++round) {
        IntMap<int> map;
        std::map<std::uint64_t, int> reference;
        for (int i = 0; i < 200; ++i) {
            const std::uint64_t key = rng.chance(50) ? rng.below(64) : rng.below(1u << 20) * 977;
            const int value = static_cast<int>(rng.below(1000));
            map = map.insert(key, value);
            reference[key] = value;
        }
        ASSERT_EQ(map.size(), reference.size());
        std::vector<std::pair<std::uint64_t, int>> visited;
        map.for_each([&](std::uint64_t k, const int& v) { visited.emplace_back(k, v); });
        const std::vector<std::pair<std::uint64_t, int>> expected(reference.begin(), reference.end());
        EXPECT_EQ(visited, expected);
        for (std::uint64_t probe = 0; probe < 64; ++probe) {
            EXPECT_EQ(map.contains(probe), reference.count(probe) == 1);
        }
    }
}
