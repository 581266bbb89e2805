#pragma once

// Brute-force ground truth over explicit matrix groups.

#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "glperm/oracle/field.hpp"
#include "glperm/oracle/matrix.hpp"
#include "glperm/oracle/orbits.hpp"
#include "glperm/oracle/vic.hpp"
#include "glperm/qpoly.hpp"

namespace glperm::oracle {

inline constexpr std::uint64_t kGroupScanGuard = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kConjugacyGuard = std::uint64_t{1} << 21;

namespace detail {

inline std::uint64_t checked_power(std::uint64_t q, std::size_t e, std::uint64_t guard, const char* what) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > guard / q) throw GuardExceeded(std::string(what) + ": exceeds guard " + std::to_string(guard));
        r *= q;
    }
    return r;
}

}  // namespace detail

/// Every invertible n x n matrix, in key order.
inline std::vector<MatrixFq> enumerate_group(const FieldTable& F, std::size_t n, std::uint64_t guard = kGroupScanGuard) {
    const std::uint64_t total = detail::checked_power(F.order(), n * n, guard, "enumerate_group");
    std::vector<MatrixFq> out;
    for (std::uint64_t k = 0; k < total; ++k) {
        MatrixFq a = decode(F, k, n, n);
        if (rank(F, a) == n) out.push_back(std::move(a));
    }
    return out;
}

/// diag(z, 1, ..., 1) with z a generator of F_q^x, the transvection 1 + E_12,
/// and the cyclic permutation e_i -> e_{i+1}.
inline std::vector<MatrixFq> group_generators(const FieldTable& F, std::size_t n) {
    if (n == 0) throw BadParameters("group_generators: n must be positive");
    std::vector<MatrixFq> gens;
    MatrixFq d = MatrixFq::identity(n);
    d(0, 0) = F.generator();
    gens.push_back(d);
    if (n >= 2) {
        MatrixFq t = MatrixFq::identity(n);
        t(0, 1) = 1;
        gens.push_back(t);
        MatrixFq c(n, n);
        for (std::size_t i = 0; i < n; ++i) c((i + 1) % n, i) = 1;
        gens.push_back(c);
    }
    return gens;
}

/// A second generating set: diag(z, 1, ..., 1) and every 1 + E_ij.
inline std::vector<MatrixFq> elementary_generators(const FieldTable& F, std::size_t n) {
    if (n == 0) throw BadParameters("elementary_generators: n must be positive");
    std::vector<MatrixFq> gens;
    MatrixFq d = MatrixFq::identity(n);
    d(0, 0) = F.generator();
    gens.push_back(d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            MatrixFq t = MatrixFq::identity(n);
            t(i, j) = 1;
            gens.push_back(t);
        }
    return gens;
}

/// The group generated by `gens`, by breadth-first closure.
inline std::vector<MatrixFq> group_closure(const FieldTable& F, const std::vector<MatrixFq>& gens, std::size_t n,
                                           std::uint64_t guard = kGroupScanGuard) {
    std::set<std::uint64_t> seen;
    std::vector<MatrixFq> out;
    std::deque<MatrixFq> queue{MatrixFq::identity(n)};
    seen.insert(encode(F, queue.front()));
    while (!queue.empty()) {
        MatrixFq x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            MatrixFq y = multiply(F, g, x);
            if (seen.insert(encode(F, y)).second) {
                if (seen.size() > guard) throw GuardExceeded("group_closure: exceeds guard");
                queue.push_back(std::move(y));
            }
        }
        out.push_back(std::move(x));
    }
    return out;
}

/// Generators of L_{l,r} = { diag(1_l, g) : g in GL_r }.
inline std::vector<MatrixFq> weakstab_generators(const FieldTable& F, std::size_t l, std::size_t r) {
    std::vector<MatrixFq> out;
    if (r == 0) return out;
    for (const auto& g : group_generators(F, r)) out.push_back(block_diag(MatrixFq::identity(l), g));
    return out;
}

/// g . (f, p) = (g f, p g^-1) on packed keys.
inline KeyAction vic_action(const VicSpace& space, const MatrixFq& g) {
    const FieldTable& F = space.field();
    const MatrixFq g_inv = *inverse(F, g);
    return [&space, &F, g, g_inv](std::uint64_t key) {
        auto [f, p] = space.unpack(key);
        return space.pack(multiply(F, g, f), multiply(F, p, g_inv));
    };
}

inline std::vector<KeyAction> vic_actions(const VicSpace& space, const std::vector<MatrixFq>& gens) {
    std::vector<KeyAction> out;
    for (const auto& g : gens) out.push_back(vic_action(space, g));
    return out;
}

/// Number of L_{l,r}-orbits on VIC morphisms F^m -> F^{l+r}, i.e.
/// |L_{l,r} \ G_n / L_{m,n-m}|.
inline std::size_t weakstab_cosets(std::size_t l, std::size_t m, std::size_t r, std::uint64_t q,
                                   std::uint64_t guard = kDefaultSpaceGuard) {
    const std::size_t n = l + r;
    if (n < m) throw BadParameters("weakstab_cosets: need l + r >= m");
    FieldTable F(static_cast<unsigned>(q));
    VicSpace space(F, m, n, guard);
    return orbit_count(space, vic_actions(space, weakstab_generators(F, l, r)));
}

/// |G_{n-m} \ G_n / G_{n-m}|, counted as L_{m,n-m}-orbits on VIC morphisms F^m -> F^n.
inline std::size_t double_cosets_gl(std::size_t n, std::size_t m, std::uint64_t q,
                                    std::uint64_t guard = kDefaultSpaceGuard) {
    if (m > n) throw BadParameters("double_cosets_gl: need m <= n");
    return weakstab_cosets(m, m, n - m, q, guard);
}

struct SurjectivityReport {
    bool surjective = false;
    bool below_threshold = false;  ///< r < m + min(m, l): surjectivity is not guaranteed
    std::size_t classes_n = 0;
    std::size_t classes_n1 = 0;
    std::size_t classes_hit = 0;
};

/// Whether g -> diag(g, 1) induces a surjection
/// L_{l,r} \ G_n / L_{m,n-m} -> L_{l,r+1} \ G_{n+1} / L_{m,n+1-m}.
inline SurjectivityReport weakstab_map_surjective(std::size_t l, std::size_t m, std::size_t r, std::uint64_t q,
                                                  std::uint64_t guard = kDefaultSpaceGuard) {
    const std::size_t n = l + r;
    if (n < m) throw BadParameters("weakstab_map_surjective: need l + r >= m");
    FieldTable F(static_cast<unsigned>(q));
    VicSpace small(F, m, n, guard);
    VicSpace big(F, m, n + 1, guard);
    const auto small_labels = orbit_labels(small, vic_actions(small, weakstab_generators(F, l, r)));
    const auto big_labels = orbit_labels(big, vic_actions(big, weakstab_generators(F, l, r + 1)));

    SurjectivityReport rep;
    rep.below_threshold = r < m + std::min(m, l);
    std::vector<bool> hit(big.size(), false);
    for (std::size_t i = 0; i < small.size(); ++i) {
        if (small_labels[i] != i) continue;  // one representative per class
        ++rep.classes_n;
        auto [f, p] = small.unpack(small.key(i));
        MatrixFq f1(n + 1, m), p1(m, n + 1);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < m; ++b) f1(a, b) = f(a, b), p1(b, a) = p(b, a);
        auto j = big.index_of(big.pack(f1, p1));
        if (!j) throw VerificationFailure("weakstab_map_surjective: embedded point missing");
        hit[big_labels[*j]] = true;
    }
    for (std::size_t j = 0; j < big.size(); ++j) {
        if (big_labels[j] != j) continue;
        ++rep.classes_n1;
        if (hit[j]) ++rep.classes_hit;
    }
    rep.surjective = rep.classes_hit == rep.classes_n1;
    return rep;
}

/// Number of conjugacy classes of GL_n(F_q), by orbit counting on the group.
inline std::size_t conjugacy_class_count(std::size_t n, std::uint64_t q) {
    FieldTable F(static_cast<unsigned>(q));
    const BigInt order = gl_order(static_cast<int>(n), q);
    if (order > BigInt(kConjugacyGuard)) throw GuardExceeded("conjugacy_class_count: |GL_n| exceeds guard");
    std::vector<std::uint64_t> keys;
    for (const auto& g : enumerate_group(F, n)) keys.push_back(encode(F, g));
    IndexedSpace space(std::move(keys));
    std::vector<KeyAction> actions;
    for (const auto& g : group_generators(F, n)) {
        const MatrixFq g_inv = *inverse(F, g);
        actions.push_back([&F, n, g, g_inv](std::uint64_t k) {
            return encode(F, multiply(F, multiply(F, g, decode(F, k, n, n)), g_inv));
        });
    }
    return orbit_count(space, actions);
}

inline std::size_t vic_count(std::size_t m, std::size_t n, std::uint64_t q, std::uint64_t guard = kDefaultSpaceGuard) {
    FieldTable F(static_cast<unsigned>(q));
    return VicSpace(F, m, n, guard).size();
}

}  // namespace glperm::oracle
