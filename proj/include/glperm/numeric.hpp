#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace glperm {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exceptions shared by all modules. Everything derives from std::runtime_error
// or std::invalid_argument so callers can catch broadly.

struct BadParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BoundExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const BigRational& v) {
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

inline BigInt pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// n (n-1) ... (n-k+1); zero when k > n >= 0.
inline BigInt falling_factorial(const BigInt& n, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        BigInt f = n - i;
        if (f <= 0) return 0;
        r *= f;
    }
    return r;
}

inline BigInt factorial(unsigned k) {
    BigInt r = 1;
    for (unsigned i = 2; i <= k; ++i) r *= i;
    return r;
}

// Exact quotient; throws when the division leaves a remainder.
inline BigInt divide_exact(const BigInt& num, const BigInt& den, const char* what) {
    if (den == 0) throw VerificationFailure(std::string(what) + ": division by zero");
    BigInt quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) throw VerificationFailure(std::string(what) + ": inexact division");
    return quot;
}

namespace detail {

using U128 = boost::multiprecision::uint128_t;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(U128(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Integer k-th root, floor.
inline std::uint64_t iroot(std::uint64_t x, unsigned k) {
    if (k == 1) return x;
    std::uint64_t lo = 0, hi = std::uint64_t{1} << (64 / k + 1);
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        U128 p = 1;
        bool over = false;
        for (unsigned i = 0; i < k; ++i) {
            p *= mid;
            if (p > x) {
                over = true;
                break;
            }
        }
        if (over)
            hi = mid - 1;
        else
            lo = mid;
    }
    return lo;
}

}  // namespace detail

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    for (unsigned k = 1; k < 64; ++k) {
        std::uint64_t r = detail::iroot(q, k);
        if (r < 2) break;
        detail::U128 p = 1;
        for (unsigned i = 0; i < k; ++i) p *= r;
        if (p == q && is_prime(r)) return true;
    }
    return false;
}

inline void require_prime_power(std::uint64_t q) {
    if (!is_prime_power(q)) throw BadParameters("q = " + std::to_string(q) + " is not a prime power");
}

}  // namespace glperm
