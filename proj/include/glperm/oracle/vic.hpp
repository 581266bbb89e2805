#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "glperm/degrees.hpp"
#include "glperm/oracle/matrix.hpp"

namespace glperm::oracle {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A VIC morphism F_q^m -> F_q^n: an injective map f (n x m) together with a
/// complement K of its image, stored as the reduced row echelon basis
/// (n - m rows of length n).
struct VicMorphism {
    MatrixFq map;
    MatrixFq complement;

    std::size_t source_dim() const noexcept { return map.cols(); }
    std::size_t target_dim() const noexcept { return map.rows(); }

    friend bool operator==(const VicMorphism&, const VicMorphism&) = default;
    friend auto operator<=>(const VicMorphism&, const VicMorphism&) = default;
};

inline VicMorphism make_vic(const FieldTable& F, const MatrixFq& map, const MatrixFq& complement_rows) {
    const std::size_t n = map.rows(), m = map.cols();
    if (complement_rows.cols() != n) throw DimensionMismatch("make_vic: complement vectors have wrong length");
    if (rank(F, map) != m) throw BadParameters("make_vic: map is not injective");
    MatrixFq k = rref(F, complement_rows);
    if (k.rows() != n - m) throw BadParameters("make_vic: complement has wrong dimension");
    if (rank(F, hconcat(map, transpose(k))) != n) throw BadParameters("make_vic: complement meets the image");
    return {map, std::move(k)};
}

inline VicMorphism identity_vic(std::size_t n) { return {MatrixFq::identity(n), MatrixFq(0, n)}; }

/// F^m -> F^n, e_i -> e_i, complement = vectors whose first m coordinates vanish.
inline VicMorphism standard_inclusion(std::size_t m, std::size_t n) {
    if (m > n) throw DimensionMismatch("standard_inclusion: m > n");
    MatrixFq f(n, m), k(n - m, n);
    for (std::size_t i = 0; i < m; ++i) f(i, i) = 1;
    for (std::size_t i = 0; i < n - m; ++i) k(i, m + i) = 1;
    return {std::move(f), std::move(k)};
}

/// (g, L) o (f, K) = (g f, g(K) + L).
inline VicMorphism compose_vic(const FieldTable& F, const VicMorphism& g, const VicMorphism& f) {
    if (g.source_dim() != f.target_dim()) throw DimensionMismatch("compose_vic: dimensions do not chain");
    const MatrixFq gk = multiply(F, f.complement, transpose(g.map));  // rows: g applied to K's basis
    MatrixFq stacked(gk.rows() + g.complement.rows(), g.target_dim());
    for (std::size_t i = 0; i < gk.rows(); ++i)
        for (std::size_t j = 0; j < gk.cols(); ++j) stacked(i, j) = gk(i, j);
    for (std::size_t i = 0; i < g.complement.rows(); ++i)
        for (std::size_t j = 0; j < g.complement.cols(); ++j) stacked(gk.rows() + i, j) = g.complement(i, j);
    return make_vic(F, multiply(F, g.map, f.map), stacked);
}

/// The projection p (m x n) with p f = 1 and ker p = K.
inline MatrixFq left_inverse(const FieldTable& F, const VicMorphism& phi) {
    const std::size_t m = phi.source_dim();
    auto a_inv = inverse(F, hconcat(phi.map, transpose(phi.complement)));
    if (!a_inv) throw BadParameters("left_inverse: not a VIC morphism");
    MatrixFq p(m, phi.target_dim());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) p(i, j) = (*a_inv)(i, j);
    return p;
}

/// (f, p) with p f = 1 determines the morphism (f, ker p).
inline VicMorphism from_section(const FieldTable& F, const MatrixFq& map, const MatrixFq& section) {
    return make_vic(F, map, left_null_space(F, transpose(section)));
}

inline constexpr std::uint64_t kDefaultSpaceGuard = std::uint64_t{1} << 22;

/// Every VIC morphism F^m -> F^n, as (f, p) pairs with p f = 1 packed into
/// 64-bit keys (f's base-q digits first, then p's). Sorted.
class VicSpace {
public:
    VicSpace(const FieldTable& F, std::size_t m, std::size_t n, std::uint64_t guard = kDefaultSpaceGuard)
        : F_(&F), m_(m), n_(n) {
        if (m > n) throw BadParameters("VicSpace: m > n");
        const BigInt expected = vic_hom_count(static_cast<int>(m), static_cast<int>(n), F.order());
        if (expected > guard)
            throw GuardExceeded("VIC space of size " + expected.str() + " exceeds guard " + std::to_string(guard));
        const BigInt key_range = pow(BigInt(F.order()), static_cast<unsigned>(2 * n * m));
        if (key_range > BigInt(std::numeric_limits<std::uint64_t>::max()))
            throw GuardExceeded("VIC space keys do not fit in 64 bits");
        f_radix_ = pow(BigInt(F.order()), static_cast<unsigned>(n * m)).convert_to<std::uint64_t>();
        keys_.reserve(expected.convert_to<std::size_t>());
        enumerate();
        std::sort(keys_.begin(), keys_.end());
        if (BigInt(keys_.size()) != expected) throw VerificationFailure("VicSpace: count does not match formula");
    }

    const FieldTable& field() const noexcept { return *F_; }
    std::size_t source_dim() const noexcept { return m_; }
    std::size_t target_dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return keys_.size(); }
    std::uint64_t key(std::size_t i) const { return keys_[i]; }
    const std::vector<std::uint64_t>& keys() const noexcept { return keys_; }

    std::optional<std::size_t> index_of(std::uint64_t k) const {
        auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
        if (it == keys_.end() || *it != k) return std::nullopt;
        return static_cast<std::size_t>(it - keys_.begin());
    }

    std::uint64_t pack(const MatrixFq& f, const MatrixFq& p) const { return encode(*F_, f) + f_radix_ * encode(*F_, p); }

    std::pair<MatrixFq, MatrixFq> unpack(std::uint64_t k) const {
        return {decode(*F_, k % f_radix_, n_, m_), decode(*F_, k / f_radix_, m_, n_)};
    }

    VicMorphism morphism(std::size_t i) const {
        auto [f, p] = unpack(keys_[i]);
        return from_section(*F_, f, p);
    }

private:
    void enumerate() {
        const FieldTable& F = *F_;
        const std::uint64_t q = F.order();
        const std::size_t free_entries = m_ * (n_ - m_);
        std::uint64_t n_coeffs = 1;
        for (std::size_t i = 0; i < free_entries; ++i) n_coeffs *= q;
        for (std::uint64_t fk = 0; fk < f_radix_; ++fk) {
            const MatrixFq f = decode(F, fk, n_, m_);
            std::vector<std::size_t> piv;
            rref(F, transpose(f), &piv);  // pivots = linearly independent rows of f
            if (piv.size() != m_) continue;
            MatrixFq fr(m_, m_);
            for (std::size_t i = 0; i < m_; ++i)
                for (std::size_t j = 0; j < m_; ++j) fr(i, j) = f(piv[i], j);
            const MatrixFq fr_inv = *inverse(F, fr);
            MatrixFq p0(m_, n_);
            for (std::size_t i = 0; i < m_; ++i)
                for (std::size_t j = 0; j < m_; ++j) p0(i, piv[j]) = fr_inv(i, j);
            const MatrixFq null = left_null_space(F, f);  // (n-m) x n
            for (std::uint64_t ck = 0; ck < n_coeffs; ++ck) {
                const MatrixFq c = decode(F, ck, m_, n_ - m_);
                MatrixFq p = p0;
                if (n_ > m_) {
                    const MatrixFq shift = multiply(F, c, null);
                    for (std::size_t i = 0; i < m_; ++i)
                        for (std::size_t j = 0; j < n_; ++j) p(i, j) = F.add(p(i, j), shift(i, j));
                }
                keys_.push_back(encode(F, f) + f_radix_ * encode(F, p));
            }
        }
    }

    const FieldTable* F_;
    std::size_t m_, n_;
    std::uint64_t f_radix_ = 1;
    std::vector<std::uint64_t> keys_;
};

/// All VIC morphisms F^m -> F^n in canonical (f, RREF complement) form.
inline std::vector<VicMorphism> vic_morphisms(const FieldTable& F, std::size_t m, std::size_t n,
                                              std::uint64_t guard = kDefaultSpaceGuard) {
    VicSpace space(F, m, n, guard);
    std::vector<VicMorphism> out;
    out.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) out.push_back(space.morphism(i));
    return out;
}

}  // namespace glperm::oracle
