#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "glperm/branching.hpp"

namespace glperm {

/// The decomposition at n = 3m, valid in stable coordinates for every n >= 3m.
inline Decomposition stable_decomposition(int m, std::uint64_t q) {
    if (m < 0) throw BadParameters("stable_decomposition: m must be non-negative");
    return decompose_perm_module(3 * m, m, q);
}

/// Same shapes with the same multiplicities and class sizes.
inline bool same_in_stable_coordinates(const Decomposition& a, const Decomposition& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        const auto &x = a.entries[i], &y = b.entries[i];
        if (!(x.shape == y.shape) || x.multiplicity != y.multiplicity || x.class_size != y.class_size) return false;
    }
    return true;
}

struct StabilityReport {
    int m = 0;
    std::uint64_t q = 2;
    int n_max = 0;
    std::vector<Decomposition> per_n;  // n = m, m+1, ..., n_max
    int observed_degree = 0;
    bool bound_satisfied = false;

    const Decomposition& at(int n) const { return per_n.at(static_cast<std::size_t>(n - m)); }
};

/// Decompositions of k[G_n/G_{n-m}] for n in [n_min, n_max], computed on up
/// to `threads` workers.
inline std::vector<Decomposition> decompositions_for_range(int m, std::uint64_t q, int n_min, int n_max,
                                                           unsigned threads = 1) {
    if (m < 0 || n_min < m || n_max < n_min)
        throw BadParameters("decompositions_for_range: need 0 <= m <= n_min <= n_max");
    const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
    std::vector<Decomposition> out(count);
    std::vector<std::exception_ptr> errors(count);
    auto work = [&](std::size_t i) {
        try {
            out[i] = decompose_perm_module(n_min + static_cast<int>(i), m, q);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
    } else {
        // Largest n first; they dominate the running time.
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t k; (k = next++) < count;) work(count - 1 - k);
            });
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

inline StabilityReport empirical_stability_degree(int m, std::uint64_t q, int n_max, unsigned threads = 1) {
    if (m < 0) throw BadParameters("empirical_stability_degree: m must be non-negative");
    if (n_max < 3 * m) throw BadParameters("empirical_stability_degree: need n_max >= 3m");
    StabilityReport rep;
    rep.m = m;
    rep.q = q;
    rep.n_max = n_max;
    rep.per_n = decompositions_for_range(m, q, m, n_max, threads);
    int degree = n_max;
    while (degree > m && same_in_stable_coordinates(rep.at(degree - 1), rep.at(n_max))) --degree;
    rep.observed_degree = degree;
    rep.bound_satisfied = degree <= 3 * m;
    return rep;
}

struct HBijectionCheck {
    BigInt lhs;  // paths at size l
    BigInt rhs;  // paths at size l + 1
    bool equal = false;
    bool below_threshold = false;  // l < 3m: equality is not guaranteed
};

/// Compares |Z(trivial(l-m), lambda[l])| with |Z(trivial(l+1-m), lambda[l+1])|.
inline HBijectionCheck check_h_bijection(int m, int l, std::uint64_t q, const StableLabel& lambda, bool strict = false) {
    if (m < 0 || l < m) throw BadParameters("check_h_bijection: need 0 <= m <= l");
    if (strict && l < 3 * m) throw BadParameters("check_h_bijection: l < 3m under strict mode");
    HBijectionCheck out;
    out.lhs = count_zigzag(trivial_label(l - m), pad(lambda, l), m, q);
    out.rhs = count_zigzag(trivial_label(l + 1 - m), pad(lambda, l + 1), m, q);
    out.equal = out.lhs == out.rhs;
    out.below_threshold = l < 3 * m;
    return out;
}

/// Every entry has |lambda| <= 2m and lambda(iota)_1 <= m.
inline bool support_bounds_check(const Decomposition& dec) {
    return std::all_of(dec.entries.begin(), dec.entries.end(), [&](const DecompositionEntry& e) {
        return e.shape.norm() <= 2 * dec.m && e.shape.iota.row(0) <= dec.m;
    });
}

struct MarginReport {
    std::size_t targets = 0;
    std::size_t states = 0;
    std::size_t violations = 0;
};

/// Counts iota partitions with row1 - 1 < row2 among the states visited while
/// counting paths from trivial(l-m) to each constituent of the size-l
/// decomposition.
inline MarginReport first_row_margin_check(int m, int l, std::uint64_t q) {
    const Decomposition dec = decompose_perm_module(l, m, q);
    MarginReport rep;
    for (const auto& e : dec.entries) {
        const auto z = count_zigzag_traced(trivial_label(l - m), pad(e.shape, l).to_label(), m, q, true);
        if (z.count != e.multiplicity) throw VerificationFailure("first_row_margin_check: path count mismatch");
        ++rep.targets;
        rep.states += z.states;
        rep.violations += z.margin_violations;
    }
    return rep;
}

}  // namespace glperm
