#pragma once

#include <map>
#include <string>
#include <utility>

#include "glperm/numeric.hpp"

namespace glperm {

/// Univariate polynomial with exact rational coefficients. The indeterminate
/// is the field size q for group orders and degrees, or T for dimension
/// polynomials. No zero coefficients are stored.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(long long c) { set(0, BigRational(c)); }  // NOLINT: implicit constant
    QPolynomial(const BigRational& c) { set(0, c); }      // NOLINT

    static QPolynomial monomial(int exp, const BigRational& coeff = 1) {
        QPolynomial p;
        p.set(exp, coeff);
        return p;
    }

    /// q^a - q^b
    static QPolynomial binomial(int a, int b) { return monomial(a) - monomial(b); }

    const std::map<int, BigRational>& coeffs() const noexcept { return coeffs_; }

    BigRational coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? BigRational(0) : it->second;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    void set(int exp, const BigRational& c) {
        if (exp < 0) throw std::invalid_argument("QPolynomial: negative exponent");
        if (c == 0)
            coeffs_.erase(exp);
        else
            coeffs_[exp] = c;
    }

    QPolynomial& operator+=(const QPolynomial& o) {
        for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) + c);
        return *this;
    }
    QPolynomial& operator-=(const QPolynomial& o) {
        for (const auto& [e, c] : o.coeffs_) set(e, coeff(e) - c);
        return *this;
    }
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        std::map<int, BigRational> acc;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) acc[ea + eb] += ca * cb;
        QPolynomial r;
        for (auto& [e, c] : acc) r.set(e, c);
        return r;
    }
    QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

    /// Long division; returns (quotient, remainder).
    std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& d) const {
        if (d.is_zero()) throw std::domain_error("QPolynomial: division by zero polynomial");
        QPolynomial quot, rem = *this;
        const int dd = d.degree();
        const BigRational lead = d.coeffs_.rbegin()->second;
        while (!rem.is_zero() && rem.degree() >= dd) {
            const int shift = rem.degree() - dd;
            const BigRational f = rem.coeffs_.rbegin()->second / lead;
            quot.set(shift, quot.coeff(shift) + f);
            rem -= monomial(shift, f) * d;
        }
        return {quot, rem};
    }

    /// Quotient, asserting the remainder vanishes.
    QPolynomial divide_exact(const QPolynomial& d) const {
        auto [quot, rem] = divmod(d);
        if (!rem.is_zero()) throw VerificationFailure("QPolynomial: inexact division");
        return quot;
    }

    BigRational evaluate(const BigRational& x) const {
        // Horner over the dense exponent range.
        BigRational acc = 0;
        for (int e = degree(); e >= 0; --e) acc = acc * x + coeff(e);
        return acc;
    }

    /// Evaluation that must land on an integer.
    BigInt evaluate_integer(const BigInt& x) const {
        const BigRational v = evaluate(BigRational(x));
        if (boost::multiprecision::denominator(v) != 1)
            throw VerificationFailure("QPolynomial: non-integral value " + glperm::to_string(v));
        return boost::multiprecision::numerator(v);
    }

    std::string to_string(const std::string& var = "q") const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [e, c] = *it;
            BigRational a = c < 0 ? BigRational(-c) : c;
            if (s.empty())
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            const bool unit = a == 1;
            if (!unit || e == 0) {
                s += boost::multiprecision::denominator(a) == 1 ? boost::multiprecision::numerator(a).str()
                                                                 : glperm::to_string(a);
            }
            if (e > 0) {
                if (!unit) s += "*";
                s += var;
                if (e > 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    std::map<int, BigRational> coeffs_;
};

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i) as a polynomial in q.
inline QPolynomial gl_order_poly(int n) {
    QPolynomial p = 1;
    for (int i = 0; i < n; ++i) p *= QPolynomial::binomial(n, i);
    return p;
}

/// prod_{i=1}^{n} (q^i - 1)
inline QPolynomial psi_poly(int n) {
    QPolynomial p = 1;
    for (int i = 1; i <= n; ++i) p *= QPolynomial::binomial(i, 0);
    return p;
}

inline BigInt gl_order(int n, std::uint64_t q) { return gl_order_poly(n).evaluate_integer(BigInt(q)); }

inline int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

/// Number of cuspidal irreducible representations of GL_d(F_q): the number of
/// Frobenius orbits of size d on characters of F_{q^d}^x,
/// (1/d) sum_{e | d} mu(d/e) (q^e - 1).
inline BigInt cuspidal_count(int d, std::uint64_t q) {
    if (d < 1) throw BadParameters("cuspidal_count: degree must be positive");
    BigInt sum = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        sum += mobius(d / e) * (pow(BigInt(q), static_cast<unsigned>(e)) - 1);
    }
    return divide_exact(sum, BigInt(d), "cuspidal_count");
}

}  // namespace glperm
