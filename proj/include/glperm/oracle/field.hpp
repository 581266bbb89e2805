#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glperm/numeric.hpp"

namespace glperm::oracle {

using Elem = std::uint8_t;

/// Dense arithmetic tables for F_q, q <= 9. Elements are encoded as the
/// base-p digits of their polynomial representative modulo a fixed
/// irreducible polynomial:
///   q = 4: x^2 + x + 1,  q = 8: x^3 + x + 1,  q = 9: x^2 + 1.
class FieldTable {
public:
    static constexpr unsigned kMaxOrder = 9;

    explicit FieldTable(unsigned q) : q_(q) {
        std::vector<unsigned> modulus;  // monic, low degree first, leading 1 omitted
        switch (q) {
            case 2: case 3: case 5: case 7:
                p_ = q;
                k_ = 1;
                break;
            case 4:
                p_ = 2, k_ = 2, modulus = {1, 1};
                break;
            case 8:
                p_ = 2, k_ = 3, modulus = {1, 1, 0};
                break;
            case 9:
                p_ = 3, k_ = 2, modulus = {1, 0};
                break;
            default:
                throw BadParameters("FieldTable: unsupported field order " + std::to_string(q) +
                                    " (supported: 2, 3, 4, 5, 7, 8, 9)");
        }
        add_.resize(q * q);
        mul_.resize(q * q);
        for (unsigned a = 0; a < q; ++a) {
            for (unsigned b = 0; b < q; ++b) {
                const auto da = digits(a), db = digits(b);
                std::vector<unsigned> sum(k_);
                for (unsigned i = 0; i < k_; ++i) sum[i] = (da[i] + db[i]) % p_;
                add_[a * q + b] = static_cast<Elem>(encode(sum));

                std::vector<unsigned> prod(2 * k_, 0);
                for (unsigned i = 0; i < k_; ++i)
                    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                // Reduce x^t for t >= k using x^k = -modulus.
                for (unsigned t = 2 * k_ - 1; t >= k_ && t < 2 * k_; --t) {
                    const unsigned c = prod[t];
                    if (!c) continue;
                    prod[t] = 0;
                    for (unsigned i = 0; i < k_; ++i)
                        prod[t - k_ + i] = (prod[t - k_ + i] + (p_ - c) * modulus[i]) % p_;
                }
                prod.resize(k_);
                mul_[a * q + b] = static_cast<Elem>(encode(prod));
            }
        }
        neg_.resize(q);
        inv_.assign(q, 0);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                if (add(a, b) == 0) neg_[a] = static_cast<Elem>(b);
                if (mul(a, b) == 1) inv_[a] = static_cast<Elem>(b);
            }
        for (unsigned g = 1; g < q; ++g) {
            if (multiplicative_order(static_cast<Elem>(g)) == q - 1) {
                generator_ = static_cast<Elem>(g);
                break;
            }
        }
    }

    unsigned order() const noexcept { return q_; }
    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }

    Elem add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
    Elem mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
    Elem neg(unsigned a) const { return neg_[a]; }
    Elem sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
    /// Multiplicative inverse; inv(0) is reported as 0.
    Elem inv(unsigned a) const { return inv_[a]; }

    /// A generator of F_q^x.
    Elem generator() const noexcept { return generator_; }

    unsigned multiplicative_order(Elem a) const {
        if (a == 0) return 0;
        Elem x = a;
        unsigned k = 1;
        while (x != 1) {
            x = mul(x, a);
            ++k;
        }
        return k;
    }

    Elem pow(Elem a, unsigned e) const {
        Elem r = 1;
        for (unsigned i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }

private:
    std::vector<unsigned> digits(unsigned a) const {
        std::vector<unsigned> d(k_);
        for (unsigned i = 0; i < k_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    unsigned encode(const std::vector<unsigned>& d) const {
        unsigned a = 0;
        for (unsigned i = k_; i-- > 0;) a = a * p_ + d[i];
        return a;
    }

    unsigned q_;
    unsigned p_ = 0;
    unsigned k_ = 0;
    std::vector<Elem> add_, mul_, neg_, inv_;
    Elem generator_ = 1;
};

inline bool is_supported_field(std::uint64_t q) { return q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8 || q == 9; }

}  // namespace glperm::oracle
