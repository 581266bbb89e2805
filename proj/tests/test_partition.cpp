#include <algorithm>
#include <set>

#include <catch_amalgamated.hpp>

#include "glperm/partition.hpp"

using glperm::Partition;

namespace {

std::vector<Partition> all_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : glperm::partitions_of(k)) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("partition canonical form") {
    CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
    CHECK(Partition{}.empty());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition{2, 1}.to_string() == "(2,1)");
    CHECK(Partition{}.to_string() == "()");
}

TEST_CASE("size") {
    CHECK(size(Partition{}) == 0);
    CHECK(size(Partition{2, 1}) == 3);
    CHECK(size(Partition{5, 5, 1}) == 11);
}

TEST_CASE("arrow relations on examples") {
    using glperm::arrow_down;
    using glperm::arrow_up;
    CHECK(arrow_up(Partition{2, 1}, Partition{3, 2}));
    CHECK_FALSE(arrow_up(Partition{1, 1}, Partition{3, 1}));
    CHECK(arrow_up(Partition{3}, Partition{4, 1, 1}));
    CHECK(arrow_down(Partition{2, 2}, Partition{1, 1}));
    CHECK_FALSE(arrow_down(Partition{3, 1}, Partition{1, 1}));
    CHECK(arrow_down(Partition{4, 1, 1}, Partition{3}));
}

TEST_CASE("arrow_up and arrow_down are mirror images") {
    const auto universe = all_up_to(8);
    for (const auto& a : universe)
        for (const auto& b : universe) REQUIRE(glperm::arrow_up(a, b) == glperm::arrow_down(b, a));
}

TEST_CASE("down_set examples") {
    using V = std::vector<Partition>;
    auto sorted = [](V v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(glperm::down_set(Partition{1}) == sorted({Partition{1}, Partition{}}));
    CHECK(glperm::down_set(Partition{2, 1}) == sorted({Partition{2, 1}, Partition{1, 1}, Partition{2}, Partition{1}}));
    CHECK(glperm::down_set(Partition{}) == V{Partition{}});
}

TEST_CASE("down_set equals brute force") {
    const auto universe = all_up_to(8);
    for (const auto& mu : universe) {
        std::set<Partition> brute;
        for (const auto& l : universe)
            if (l.size() <= mu.size() && glperm::arrow_down(mu, l)) brute.insert(l);
        const auto got = glperm::down_set(mu);
        REQUIRE(std::set<Partition>(got.begin(), got.end()) == brute);
        REQUIRE(got.size() == brute.size());
        REQUIRE(std::binary_search(got.begin(), got.end(), mu));
    }
}

TEST_CASE("up_set examples") {
    using V = std::vector<Partition>;
    auto sorted = [](V v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(glperm::up_set(Partition{1}, 2) == sorted({Partition{2}, Partition{1, 1}}));
    CHECK(glperm::up_set(Partition{}, 2) == V{Partition{1, 1}});
    CHECK(glperm::up_set(Partition{2}, 2) == V{Partition{2}});
    CHECK(glperm::up_set(Partition{3}, 2).empty());
}

TEST_CASE("up_set equals brute force") {
    for (const auto& l : all_up_to(6))
        for (int s = l.size(); s <= 8; ++s) {
            std::set<Partition> brute;
            for (const auto& mu : glperm::partitions_of(s))
                if (glperm::arrow_up(l, mu)) brute.insert(mu);
            const auto got = glperm::up_set(l, s);
            REQUIRE(std::set<Partition>(got.begin(), got.end()) == brute);
            REQUIRE(got.size() == brute.size());
        }
}

TEST_CASE("hooks and n_stat") {
    CHECK(glperm::hooks(Partition{2, 1}) == std::vector<int>{3, 1, 1});
    CHECK(glperm::hooks(Partition{4}) == std::vector<int>{4, 3, 2, 1});
    CHECK(glperm::hooks(Partition{}).empty());
    CHECK(glperm::n_stat(Partition{5}) == 0);
    CHECK(glperm::n_stat(Partition{1, 1, 1}) == 3);
    CHECK(glperm::n_stat(Partition{2, 1}) == 1);
    for (const auto& p : all_up_to(8)) {
        REQUIRE(glperm::hooks(p).size() == static_cast<std::size_t>(p.size()));
        REQUIRE(glperm::hooks(p) == glperm::hooks(p.transpose()));
        REQUIRE(p.transpose().transpose() == p);
    }
}

TEST_CASE("partitions_of") {
    CHECK(glperm::partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(glperm::partitions_of(3) == std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
    CHECK(glperm::partitions_of(5).size() == 7);
    CHECK(glperm::partitions_of(10).size() == 42);
    CHECK_THROWS_AS(glperm::partitions_of(61), glperm::BoundExceeded);
    CHECK_THROWS_AS(glperm::partitions_of(5, 4), glperm::BoundExceeded);
    const auto p8 = glperm::partitions_of(8);
    CHECK(std::set<Partition>(p8.begin(), p8.end()).size() == p8.size());
}

TEST_CASE("partition order is by size then rows") {
    CHECK(Partition{1, 1} < Partition{3});
    CHECK(Partition{2, 1} < Partition{3});
    CHECK(Partition{} < Partition{1});
}
