#pragma once

#include <cstdint>

#include "glperm/label.hpp"
#include "glperm/qpoly.hpp"

namespace glperm {

/// Degree of phi(mu) as a polynomial in q, for a full (padded) label shape:
///   psi_n * prod_{(d, pi)} q^{d n(pi)} / prod_{h in hooks(pi)} (q^{d h} - 1)
/// with psi_n = prod_{i=1}^{n} (q^i - 1) and n the norm.
inline QPolynomial degree_poly(const LabelShape& full) {
    QPolynomial num = psi_poly(full.norm());
    QPolynomial den = 1;
    auto absorb = [&](int d, const Partition& p) {
        num *= QPolynomial::monomial(d * n_stat(p));
        for (int h : hooks(p)) den *= QPolynomial::binomial(d * h, 0);
    };
    absorb(1, full.iota);
    for (const auto& [d, parts] : full.others)
        for (const auto& p : parts) absorb(d, p);
    return num.divide_exact(den);
}

inline QPolynomial degree_poly(const LabelFunction& full) { return degree_poly(full.shape()); }

inline BigInt degree(const LabelShape& full, std::uint64_t q) { return degree_poly(full).evaluate_integer(BigInt(q)); }

struct DegreeCensus {
    BigInt sum_class_deg_sq;
    BigInt group_order;
    BigInt label_count;
    bool holds() const { return sum_class_deg_sq == group_order; }
};

/// sum over shapes of class_size * degree^2 against |GL_n(F_q)|.
inline DegreeCensus degree_census(int n, std::uint64_t q) {
    DegreeCensus c;
    for (const auto& [shape, cls] : enumerate_labels(n, q)) {
        const BigInt deg = degree(shape, q);
        c.sum_class_deg_sq += cls * deg * deg;
        c.label_count += cls;
    }
    c.group_order = gl_order(n, q);
    return c;
}

inline bool sum_degree_squares_check(int n, std::uint64_t q) {
    if (n > 5 || q > 5) throw GuardExceeded("sum_degree_squares_check: requires n <= 5 and q <= 5");
    require_prime_power(q);
    return degree_census(n, q).holds();
}

/// |Hom_VIC(F_q^m, F_q^n)| = q^{m(n-m)} prod_{i<m} (q^n - q^i).
inline BigInt vic_hom_count(int m, int n, std::uint64_t q) {
    if (m < 0 || m > n) throw BadParameters("vic_hom_count: need 0 <= m <= n");
    BigInt r = pow(BigInt(q), static_cast<unsigned>(m * (n - m)));
    const BigInt qn = pow(BigInt(q), static_cast<unsigned>(n));
    for (int i = 0; i < m; ++i) r *= qn - pow(BigInt(q), static_cast<unsigned>(i));
    return r;
}

/// P(T) = T^m q^{-m^2} prod_{i<m} (T - q^i), so that P(q^n) = vic_hom_count(m, n, q).
inline QPolynomial p_polynomial(int m, std::uint64_t q) {
    if (m < 0) throw BadParameters("p_polynomial: negative m");
    QPolynomial p = QPolynomial::monomial(m);
    for (int i = 0; i < m; ++i)
        p *= QPolynomial::monomial(1) - QPolynomial(BigRational(pow(BigInt(q), static_cast<unsigned>(i))));
    const BigRational scale(BigInt(1), pow(BigInt(q), static_cast<unsigned>(m * m)));
    return p * QPolynomial(scale);
}

}  // namespace glperm
