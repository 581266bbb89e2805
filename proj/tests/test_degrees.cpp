#include <catch_amalgamated.hpp>

#include "glperm/degrees.hpp"
#include "glperm/oracle/oracle.hpp"

using glperm::BigInt;
using glperm::BigRational;
using glperm::LabelShape;
using glperm::Partition;
using glperm::QPolynomial;

namespace {

LabelShape iota_shape(Partition p) {
    LabelShape s;
    s.iota = std::move(p);
    return s;
}

}  // namespace

TEST_CASE("gl_order_poly") {
    CHECK(glperm::gl_order_poly(0) == QPolynomial(1));
    CHECK(glperm::gl_order_poly(1) == QPolynomial::binomial(1, 0));
    CHECK(glperm::gl_order(2, 2) == 6);
    CHECK(glperm::gl_order(3, 2) == 168);
    CHECK(glperm::gl_order(2, 3) == 48);
}

TEST_CASE("gl_order matches enumerated groups") {
    for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 2}, {2, 3}, {3, 2}}) {
        const glperm::oracle::FieldTable F(static_cast<unsigned>(q));
        CHECK(BigInt(glperm::oracle::enumerate_group(F, n).size()) == glperm::gl_order(n, q));
    }
}

TEST_CASE("cuspidal_count") {
    CHECK(glperm::cuspidal_count(1, 5) == 4);
    CHECK(glperm::cuspidal_count(2, 2) == 1);
    CHECK(glperm::cuspidal_count(3, 2) == 2);
    CHECK(glperm::cuspidal_count(2, 3) == 3);
    // Integrality of the Moebius sum is enforced inside; a throw would fail here.
    for (int d = 1; d <= 12; ++d)
        for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) REQUIRE(glperm::cuspidal_count(d, q) >= 0);
}

TEST_CASE("degree_poly examples") {
    for (int n = 0; n <= 6; ++n) CHECK(glperm::degree_poly(iota_shape(glperm::trivial_label(n).iota())) == QPolynomial(1));
    CHECK(glperm::degree(iota_shape({1, 1, 1}), 2) == 8);
    LabelShape s = iota_shape({1});
    s.add(2, Partition{1});
    CHECK(glperm::degree(s, 2) == 7);
    CHECK(glperm::degree_poly(s) == QPolynomial::binomial(3, 0));
}

TEST_CASE("degree_poly closed forms") {
    for (int n = 1; n <= 6; ++n) {
        const QPolynomial steinberg = QPolynomial::monomial(n * (n - 1) / 2);
        CHECK(glperm::degree_poly(iota_shape(Partition(std::vector<int>(n, 1)))) == steinberg);
        LabelShape cusp;
        cusp.add(n, Partition{1});
        QPolynomial expected = 1;
        for (int i = 1; i < n; ++i) expected *= QPolynomial::binomial(i, 0);
        CHECK(glperm::degree_poly(cusp) == expected);
    }
}

TEST_CASE("GL3(F2) degree census") {
    std::vector<BigInt> degrees;
    BigInt sum = 0;
    for (const auto& [shape, cls] : glperm::enumerate_labels(3, 2)) {
        const BigInt d = glperm::degree(shape, 2);
        for (BigInt i = 0; i < cls; ++i) degrees.push_back(d);
        sum += cls * d * d;
    }
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<BigInt>{1, 3, 3, 6, 7, 8});
    CHECK(sum == 168);
}

TEST_CASE("sum of squared degrees equals group order") {
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t q : {2, 3}) CHECK(glperm::sum_degree_squares_check(n, q));
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t q : {4, 5}) CHECK(glperm::sum_degree_squares_check(n, q));
    CHECK_THROWS_AS(glperm::sum_degree_squares_check(6, 2), glperm::GuardExceeded);
    CHECK_THROWS_AS(glperm::sum_degree_squares_check(2, 7), glperm::GuardExceeded);
}

TEST_CASE("degree values are integers at every prime power") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& [shape, cls] : glperm::enumerate_labels(n, 2))
            for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
                const BigRational v = glperm::degree_poly(shape).evaluate(BigRational(q));
                REQUIRE(boost::multiprecision::denominator(v) == 1);
                REQUIRE(v > 0);
            }
}

TEST_CASE("vic_hom_count") {
    CHECK(glperm::vic_hom_count(1, 2, 2) == 6);
    CHECK(glperm::vic_hom_count(1, 3, 2) == 28);
    CHECK(glperm::vic_hom_count(2, 3, 2) == 168);
    for (int n = 0; n <= 4; ++n) CHECK(glperm::vic_hom_count(0, n, 3) == 1);
    CHECK_THROWS_AS(glperm::vic_hom_count(3, 2, 2), glperm::BadParameters);
    for (int m = 0; m <= 3; ++m)
        for (int n = m; n <= m + 3; ++n)
            CHECK(glperm::vic_hom_count(m, n, 3) == glperm::gl_order(n, 3) / glperm::gl_order(n - m, 3));
}

TEST_CASE("vic_hom_count matches enumerated morphisms") {
    for (auto [m, n, q] : std::vector<std::tuple<int, int, std::uint64_t>>{{1, 2, 2}, {1, 3, 2}, {2, 3, 2}, {1, 2, 3}})
        CHECK(BigInt(glperm::oracle::vic_count(m, n, q)) == glperm::vic_hom_count(m, n, q));
}

TEST_CASE("p_polynomial") {
    CHECK(glperm::p_polynomial(0, 2) == QPolynomial(1));
    const QPolynomial p1 = glperm::p_polynomial(1, 2);
    CHECK(p1.coeff(2) == BigRational(1, 2));
    CHECK(p1.coeff(1) == BigRational(-1, 2));
    CHECK(p1.evaluate(4) == 6);
    CHECK(glperm::p_polynomial(2, 2).evaluate(8) == 168);
    for (int m = 0; m <= 3; ++m)
        for (std::uint64_t q : {2, 3})
            for (int n = m; n <= m + 4; ++n)
                REQUIRE(glperm::p_polynomial(m, q).evaluate(BigRational(glperm::pow(BigInt(q), n))) ==
                        BigRational(glperm::vic_hom_count(m, n, q)));
}

TEST_CASE("polynomial arithmetic") {
    const QPolynomial x = QPolynomial::monomial(1);
    const QPolynomial a = x * x - 1;
    CHECK(a.divide_exact(x - 1) == x + 1);
    CHECK_THROWS(a.divide_exact(x - 2));
    CHECK(a.degree() == 2);
    CHECK(QPolynomial().degree() == -1);
    CHECK(a.evaluate_integer(5) == 24);
    CHECK((x * x - x).to_string() == "q^2 - q");
}
