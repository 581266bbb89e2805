#include <random>

#include <catch_amalgamated.hpp>

#include "glperm/label.hpp"
#include "glperm/oracle/oracle.hpp"

using glperm::CuspidalKey;
using glperm::LabelFunction;
using glperm::LabelShape;
using glperm::Partition;

namespace {

LabelFunction iota(Partition p) { return LabelFunction{{CuspidalKey::iota(), std::move(p)}}; }

// Every shape of norm <= n with parts of degree <= 2, at least one label per shape.
std::vector<LabelShape> small_shapes(int max_norm) {
    std::vector<LabelShape> out;
    for (int k = 0; k <= max_norm; ++k)
        for (auto& [s, c] : glperm::enumerate_labels(k, 9)) out.push_back(s);
    return out;
}

}  // namespace

TEST_CASE("norm") {
    CHECK(LabelFunction{}.norm() == 0);
    CHECK(iota({3}).norm() == 3);
    LabelFunction f = iota({1});
    f.set(CuspidalKey::anon(2, 0), Partition{1});
    CHECK(f.norm() == 3);
}

TEST_CASE("empty partitions are never stored") {
    LabelFunction f;
    f.set(CuspidalKey::anon(1, 0), Partition{});
    CHECK(f.empty());
    f.set(CuspidalKey::anon(1, 0), Partition{2});
    f.set(CuspidalKey::anon(1, 0), Partition{});
    CHECK(f.entries().empty());
    CHECK_THROWS_AS(CuspidalKey::anon(0, 0), glperm::BadParameters);
}

TEST_CASE("pad") {
    CHECK(glperm::pad(iota({2, 1}), 6) == iota({3, 2, 1}));
    CHECK_THROWS_AS(glperm::pad(iota({2, 1}), 4), glperm::PadUndefined);
    CHECK(glperm::pad(LabelFunction{}, 5) == iota({5}));
    CHECK(glperm::pad(iota({2, 1}), 5) == iota({2, 2, 1}));
}

TEST_CASE("stabilize") {
    CHECK(glperm::stabilize(iota({3, 2, 1})) == std::make_pair(iota({2, 1}), 6));
    CHECK(glperm::stabilize(iota({4})) == std::make_pair(LabelFunction{}, 4));
    CHECK(glperm::stabilize(iota({1, 1})) == std::make_pair(iota({1}), 2));
    CHECK(glperm::pad(iota({1}), 2) == iota({1, 1}));
    LabelFunction mixed;
    mixed.set(CuspidalKey::anon(2, 0), Partition{1});
    CHECK(glperm::stabilize(mixed) == std::make_pair(mixed, 2));
}

TEST_CASE("stabilize inverts pad") {
    for (const auto& s : small_shapes(6)) {
        const LabelFunction lambda = s.to_label();
        const int lo = lambda.norm() + lambda.iota().row(0);
        for (int n = lo; n <= lo + 4; ++n) {
            const LabelFunction mu = glperm::pad(lambda, n);
            REQUIRE(mu.norm() == n);
            REQUIRE(glperm::stabilize(mu) == std::make_pair(lambda, n));
        }
        if (lo > 0) REQUIRE_THROWS_AS(glperm::pad(lambda, lo - 1), glperm::PadUndefined);
    }
}

TEST_CASE("tilde") {
    CHECK(glperm::tilde(iota({3})) == iota({4}));
    CHECK(glperm::tilde(iota({2, 2})) == iota({3, 2}));
    CHECK(glperm::tilde(LabelFunction{}) == iota({1}));
    for (int k = 0; k < 6; ++k) CHECK(glperm::tilde(glperm::trivial_label(k)) == glperm::trivial_label(k + 1));
    for (const auto& s : small_shapes(5)) REQUIRE(glperm::tilde(s.to_label()).norm() == s.norm() + 1);
}

TEST_CASE("trivial_label") {
    CHECK(glperm::trivial_label(0).empty());
    CHECK(glperm::trivial_label(1) == iota({1}));
    CHECK(glperm::trivial_label(7) == iota({7}));
}

TEST_CASE("tilde preserves arrow relations") {
    // Random label pairs over a few keys; whenever alpha +-> beta or
    // alpha --> beta keywise, the lifted labels satisfy the same relation.
    std::mt19937 rng(20240611);
    const std::vector<CuspidalKey> keys{CuspidalKey::iota(), CuspidalKey::anon(1, 0), CuspidalKey::anon(2, 0)};
    std::vector<Partition> parts;
    for (int k = 0; k <= 4; ++k)
        for (auto& p : glperm::partitions_of(k)) parts.push_back(p);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    auto random_label = [&] {
        LabelFunction f;
        for (const auto& k : keys) f.set(k, parts[pick(rng)]);
        return f;
    };
    int up = 0, down = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        const LabelFunction a = random_label();
        LabelFunction b = a;
        // Nudge b by one random up or down step at each key to hit the relations often.
        for (const auto& k : keys) {
            const auto ups = glperm::up_steps(a.at(k), 2);
            const auto downs = glperm::down_set(a.at(k));
            const auto& pool = (trial % 2) ? ups : downs;
            b.set(k, pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
        }
        if (glperm::arrow_up(a, b)) {
            ++up;
            REQUIRE(glperm::arrow_up(glperm::tilde(a), glperm::tilde(b)));
        }
        if (glperm::arrow_down(a, b)) {
            ++down;
            REQUIRE(glperm::arrow_down(glperm::tilde(a), glperm::tilde(b)));
        }
    }
    CHECK(up > 1000);
    CHECK(down > 1000);
}

TEST_CASE("class_size") {
    LabelShape plain;
    plain.iota = Partition{2, 1};
    CHECK(glperm::class_size(plain, 2) == 1);
    CHECK(glperm::class_size(plain, 7) == 1);
    LabelShape deg2;
    deg2.add(2, Partition{1});
    CHECK(glperm::class_size(deg2, 2) == 1);
    LabelShape deg1;
    deg1.add(1, Partition{1});
    CHECK(glperm::class_size(deg1, 2) == 0);
    CHECK(glperm::class_size(deg1, 5) == 3);
    // Two equal parts on distinct degree-1 cuspidals at q = 5: C(3, 2).
    deg1.add(1, Partition{1});
    CHECK(glperm::class_size(deg1, 5) == 3);
    // Two different parts: 3 * 2 ordered choices.
    LabelShape mixed;
    mixed.add(1, Partition{1});
    mixed.add(1, Partition{2});
    CHECK(glperm::class_size(mixed, 5) == 6);
}

TEST_CASE("enumerate_labels") {
    const auto one = glperm::enumerate_labels(1, 2);
    REQUIRE(one.size() == 1);
    CHECK(one[0].first.iota == Partition{1});
    CHECK(one[0].second == 1);

    const auto two = glperm::enumerate_labels(2, 2);
    REQUIRE(two.size() == 3);
    for (const auto& [s, c] : two) CHECK(c == 1);

    const auto three = glperm::enumerate_labels(3, 2);
    CHECK(three.size() == 5);
    glperm::BigInt total = 0;
    for (const auto& [s, c] : three) total += c;
    CHECK(total == 6);

    CHECK_THROWS_AS(glperm::enumerate_labels(9, 2), glperm::BoundExceeded);
}

TEST_CASE("label census matches conjugacy classes") {
    for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{{1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
        glperm::BigInt total = 0;
        for (const auto& [s, c] : glperm::enumerate_labels(n, q)) total += c;
        CHECK(total == glperm::oracle::conjugacy_class_count(n, q));
    }
}

TEST_CASE("shape strings") {
    LabelShape s;
    s.iota = Partition{3, 2};
    s.add(2, Partition{1});
    CHECK(s.to_string() == "ι:(3,2); 2:(1)x1");
    CHECK(LabelShape{}.to_string() == "ι:()");
    LabelShape t;
    t.add(1, Partition{1});
    t.add(1, Partition{1});
    CHECK(t.to_string() == "1:(1)x2");
}

TEST_CASE("canonical relabels anonymous slots") {
    LabelFunction a, b;
    a.set(CuspidalKey::anon(1, 0), Partition{2});
    a.set(CuspidalKey::anon(1, 1), Partition{1});
    b.set(CuspidalKey::anon(1, 5), Partition{1});
    b.set(CuspidalKey::anon(1, 2), Partition{2});
    CHECK(a.shape() == b.shape());
    CHECK(a.canonical() == b.canonical());
}
