#include <random>
#include <set>

#include <catch_amalgamated.hpp>

#include "glperm/oracle/oracle.hpp"

using glperm::oracle::FieldTable;
using glperm::oracle::MatrixFq;
using glperm::oracle::VicMorphism;

namespace {

const VicMorphism& pick(const std::vector<VicMorphism>& v, std::mt19937& rng) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

}  // namespace

TEST_CASE("identity composes trivially") {
    const FieldTable F(3);
    for (const auto& f : glperm::oracle::vic_morphisms(F, 1, 3)) {
        REQUIRE(glperm::oracle::compose_vic(F, glperm::oracle::identity_vic(3), f) == f);
        REQUIRE(glperm::oracle::compose_vic(F, f, glperm::oracle::identity_vic(1)) == f);
    }
}

TEST_CASE("standard inclusions compose to the standard inclusion") {
    const FieldTable F(2);
    const auto a = glperm::oracle::standard_inclusion(1, 2);
    const auto b = glperm::oracle::standard_inclusion(2, 3);
    const auto c = glperm::oracle::compose_vic(F, b, a);
    CHECK(c == glperm::oracle::standard_inclusion(1, 3));
    MatrixFq map(3, 1);
    map(0, 0) = 1;
    CHECK(c.map == map);
    MatrixFq k(2, 3);
    k(0, 1) = 1;
    k(1, 2) = 1;
    CHECK(c.complement == k);
    CHECK_THROWS_AS(glperm::oracle::compose_vic(F, a, b), glperm::oracle::DimensionMismatch);
}

TEST_CASE("composition is associative") {
    for (unsigned q : {2u, 3u}) {
        const FieldTable F(q);
        const auto ab = glperm::oracle::vic_morphisms(F, 1, 2);
        const auto bc = glperm::oracle::vic_morphisms(F, 2, 3);
        const auto cd = glperm::oracle::vic_morphisms(F, 3, q == 2 ? 4 : 3);
        std::mt19937 rng(q * 1000 + 17);
        for (int trial = 0; trial < 300; ++trial) {
            const auto &f = pick(ab, rng), &g = pick(bc, rng), &h = pick(cd, rng);
            const auto left = glperm::oracle::compose_vic(F, h, glperm::oracle::compose_vic(F, g, f));
            const auto right = glperm::oracle::compose_vic(F, glperm::oracle::compose_vic(F, h, g), f);
            REQUIRE(left == right);
        }
    }
}

TEST_CASE("left inverse and section round trip") {
    const FieldTable F(3);
    for (const auto& phi : glperm::oracle::vic_morphisms(F, 2, 3)) {
        const MatrixFq p = glperm::oracle::left_inverse(F, phi);
        REQUIRE(glperm::oracle::multiply(F, p, phi.map) == MatrixFq::identity(2));
        REQUIRE(glperm::oracle::multiply(F, p, glperm::oracle::transpose(phi.complement)) == MatrixFq(2, 1));
        REQUIRE(glperm::oracle::from_section(F, phi.map, p) == phi);
    }
}

TEST_CASE("make_vic validation") {
    const FieldTable F(2);
    MatrixFq f(2, 1);
    f(0, 0) = 1;
    MatrixFq bad(1, 2);
    bad(0, 0) = 1;  // spans the image
    CHECK_THROWS_AS(glperm::oracle::make_vic(F, f, bad), glperm::BadParameters);
    CHECK_THROWS_AS(glperm::oracle::make_vic(F, MatrixFq(2, 1), MatrixFq(1, 2)), glperm::BadParameters);
    CHECK_THROWS_AS(glperm::oracle::make_vic(F, f, MatrixFq(1, 3)), glperm::oracle::DimensionMismatch);
    MatrixFq k(2, 2);
    k(0, 1) = 1;
    k(1, 1) = 1;  // rank one after reduction
    const auto phi = glperm::oracle::make_vic(F, f, k);
    CHECK(phi.complement.rows() == 1);
}

TEST_CASE("vic_morphisms counts") {
    const FieldTable F2(2), F3(3);
    CHECK(glperm::oracle::vic_morphisms(F2, 1, 2).size() == 6);
    CHECK(glperm::oracle::vic_morphisms(F2, 1, 3).size() == 28);
    CHECK(glperm::oracle::vic_morphisms(F2, 2, 3).size() == 168);
    CHECK(glperm::oracle::vic_morphisms(F3, 1, 2).size() == 24);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(glperm::oracle::vic_morphisms(F3, 0, n).size() == 1);
    const auto all = glperm::oracle::vic_morphisms(F2, 2, 4);
    CHECK(std::set<VicMorphism>(all.begin(), all.end()).size() == all.size());
    CHECK_THROWS_AS(glperm::oracle::VicSpace(F2, 2, 4, 100), glperm::GuardExceeded);
}

TEST_CASE("packed keys round trip") {
    const FieldTable F(3);
    const glperm::oracle::VicSpace space(F, 1, 3);
    for (std::size_t i = 0; i < space.size(); ++i) {
        const auto [f, p] = space.unpack(space.key(i));
        REQUIRE(space.pack(f, p) == space.key(i));
        REQUIRE(glperm::oracle::multiply(F, p, f) == MatrixFq::identity(1));
        REQUIRE(space.index_of(space.key(i)) == i);
    }
}
