#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "glperm/degrees.hpp"
#include "glperm/label.hpp"
#include "glperm/numeric.hpp"
#include "glperm/partition.hpp"

namespace glperm {

struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two sequences lambda^(1..m), mu^(1..m) with
///   nu --> lambda^(1) +-> mu^(1) --> lambda^(2) +-> ... +-> mu^(m) = target.
struct ZigzagPath {
    std::vector<LabelFunction> lambdas;
    std::vector<LabelFunction> mus;
};

inline bool is_zigzag_path(const LabelFunction& nu, const LabelFunction& mu, const ZigzagPath& path) {
    const std::size_t m = path.mus.size();
    if (m == 0 || path.lambdas.size() != m || !(path.mus.back() == mu)) return false;
    const int n = mu.norm();
    for (std::size_t s = 0; s < m; ++s) {
        if (path.mus[s].norm() != n - static_cast<int>(m) + static_cast<int>(s) + 1) return false;
        const LabelFunction& below = s == 0 ? nu : path.mus[s - 1];
        if (!arrow_down(below, path.lambdas[s])) return false;
        if (!arrow_up(path.lambdas[s], path.mus[s])) return false;
    }
    return true;
}

namespace zigzag {

/// Symmetry-reduced DP state. `pinned` follows the engine's pinned cuspidals
/// (possibly empty partitions); `fresh` is the sorted multiset of
/// (degree, partition) carried by unpinned cuspidals other than iota.
struct State {
    Partition iota;
    std::vector<Partition> pinned;
    std::vector<std::pair<int, Partition>> fresh;

    friend bool operator==(const State&, const State&) = default;
    friend auto operator<=>(const State&, const State&) = default;
};

/// One concrete successor set of a representative, aggregated by class.
using Layer = std::map<State, BigInt>;

/// Generates successor states for the up (+->) and down (-->) halves of a
/// zigzag step over the cuspidal pool of GL(F_q). Unpinned cuspidals are
/// interchangeable, so successors are enumerated from one representative and
/// fresh activations carry the number of concrete ways to choose them.
class Engine {
public:
    Engine(std::uint64_t q, std::vector<int> pinned_degrees, int max_degree)
        : q_(q), pinned_degrees_(std::move(pinned_degrees)), max_degree_(std::max(max_degree, 1)) {
        std::map<int, int> pinned_per_degree;
        for (int d : pinned_degrees_) {
            max_degree_ = std::max(max_degree_, d);
            ++pinned_per_degree[d];
        }
        available_.assign(static_cast<std::size_t>(max_degree_) + 1, 0);
        for (int d = 1; d <= max_degree_; ++d) {
            BigInt avail = non_iota_cuspidals(d, q_) - pinned_per_degree[d];
            if (avail < 0)
                throw BadParameters("label needs more degree-" + std::to_string(d) +
                                    " cuspidals than exist at q = " + std::to_string(q_));
            available_[static_cast<std::size_t>(d)] = std::move(avail);
        }
        for (int r = 0; r <= max_degree_; ++r) activations_.push_back(build_activations(r));
    }

    std::uint64_t q() const noexcept { return q_; }
    const std::vector<int>& pinned_degrees() const noexcept { return pinned_degrees_; }

    /// Unpinned non-iota cuspidals of degree d.
    const BigInt& available(int d) const { return available_.at(static_cast<std::size_t>(d)); }

    int norm(const State& s) const {
        int n = s.iota.size();
        for (std::size_t i = 0; i < s.pinned.size(); ++i) n += pinned_degrees_[i] * s.pinned[i].size();
        for (const auto& [d, p] : s.fresh) n += d * p.size();
        return n;
    }

    /// Number of concrete states represented by s.
    BigInt class_size(const State& s) const {
        BigInt r = 1;
        std::size_t i = 0;
        while (i < s.fresh.size()) {
            const int d = s.fresh[i].first;
            std::vector<Partition> parts;
            for (; i < s.fresh.size() && s.fresh[i].first == d; ++i) parts.push_back(s.fresh[i].second);
            r *= count_assignments(available(d), parts);
        }
        return r;
    }

    /// All concrete successors lambda with s --> lambda (weight one each).
    std::vector<State> down(const State& s) const {
        std::vector<std::vector<Partition>> choices;
        choices.reserve(1 + s.pinned.size() + s.fresh.size());
        choices.push_back(down_set(s.iota));
        for (const auto& p : s.pinned) choices.push_back(down_set(p));
        for (const auto& [d, p] : s.fresh) choices.push_back(down_set(p));

        std::vector<State> out;
        std::vector<std::size_t> idx(choices.size(), 0);
        while (true) {
            State t;
            t.iota = choices[0][idx[0]];
            t.pinned.reserve(s.pinned.size());
            for (std::size_t i = 0; i < s.pinned.size(); ++i) t.pinned.push_back(choices[1 + i][idx[1 + i]]);
            for (std::size_t i = 0; i < s.fresh.size(); ++i) {
                const Partition& p = choices[1 + s.pinned.size() + i][idx[1 + s.pinned.size() + i]];
                if (!p.empty()) t.fresh.emplace_back(s.fresh[i].first, p);
            }
            std::sort(t.fresh.begin(), t.fresh.end());
            out.push_back(std::move(t));

            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
        return out;
    }

    /// All successors mu with s +-> mu and norm(mu) == target_norm, weighted by
    /// the number of concrete choices of freshly activated cuspidals.
    std::vector<std::pair<State, BigInt>> up(const State& s, int target_norm) const {
        std::vector<std::pair<State, BigInt>> out;
        const int budget = target_norm - norm(s);
        if (budget < 0) return out;
        if (budget > max_degree_)
            throw BadParameters("zigzag engine: step budget exceeds configured maximum degree");

        std::map<int, int> active;
        for (const auto& [d, p] : s.fresh) ++active[d];

        State cur;
        cur.pinned.reserve(s.pinned.size());
        up_existing(s, 0, budget, cur, active, out);
        return out;
    }

private:
    // Columns (1^a) on degree-d cuspidals, as a multiset of (d, a) pairs with
    // sum d*a == r, listed in non-increasing order.
    using Activation = std::vector<std::pair<int, int>>;

    static void activations_rec(int remaining, std::pair<int, int> max_item, Activation& cur,
                                std::vector<Activation>& out) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int d = std::min(remaining, max_item.first); d >= 1; --d) {
            const int a_cap = d == max_item.first ? max_item.second : remaining / d;
            for (int a = std::min(a_cap, remaining / d); a >= 1; --a) {
                cur.emplace_back(d, a);
                activations_rec(remaining - d * a, {d, a}, cur, out);
                cur.pop_back();
            }
        }
    }

    static std::vector<Activation> build_activations(int r) {
        std::vector<Activation> out;
        Activation cur;
        activations_rec(r, {r, r}, cur, out);
        return out;
    }

    static Partition column(int a) { return make_partition_unchecked(std::vector<int>(static_cast<std::size_t>(a), 1)); }

    // Slot order: iota, pinned..., fresh...; then leftover budget is spent on
    // fresh activations.
    void up_existing(const State& s, std::size_t slot, int budget, State& cur, const std::map<int, int>& active,
                     std::vector<std::pair<State, BigInt>>& out) const {
        const std::size_t n_pinned = s.pinned.size();
        const std::size_t n_slots = 1 + n_pinned + s.fresh.size();
        if (slot == n_slots) {
            activate(budget, cur, active, out);
            return;
        }
        int d;
        const Partition* base;
        if (slot == 0) {
            d = 1;
            base = &s.iota;
        } else if (slot <= n_pinned) {
            d = pinned_degrees_[slot - 1];
            base = &s.pinned[slot - 1];
        } else {
            d = s.fresh[slot - 1 - n_pinned].first;
            base = &s.fresh[slot - 1 - n_pinned].second;
        }
        for (auto& p : up_steps(*base, budget / d)) {
            const int cost = d * (p.size() - base->size());
            if (slot == 0)
                cur.iota = std::move(p);
            else if (slot <= n_pinned)
                cur.pinned.push_back(std::move(p));
            else
                cur.fresh.emplace_back(d, std::move(p));
            up_existing(s, slot + 1, budget - cost, cur, active, out);
            if (slot > n_pinned)
                cur.fresh.pop_back();
            else if (slot > 0)
                cur.pinned.pop_back();
        }
    }

    void activate(int budget, const State& cur, const std::map<int, int>& active,
                  std::vector<std::pair<State, BigInt>>& out) const {
        for (const auto& act : activations_[static_cast<std::size_t>(budget)]) {
            BigInt weight = 1;
            std::size_t i = 0;
            while (i < act.size() && weight != 0) {
                const int d = act[i].first;
                std::vector<Partition> cols;
                for (; i < act.size() && act[i].first == d; ++i) cols.push_back(column(act[i].second));
                std::sort(cols.begin(), cols.end());
                auto it = active.find(d);
                const int already = it == active.end() ? 0 : it->second;
                weight *= count_assignments(available(d) - already, cols);
            }
            if (weight == 0) continue;
            State t = cur;
            for (const auto& [d, a] : act) t.fresh.emplace_back(d, column(a));
            std::sort(t.fresh.begin(), t.fresh.end());
            out.emplace_back(std::move(t), std::move(weight));
        }
    }

    std::uint64_t q_;
    std::vector<int> pinned_degrees_;
    int max_degree_;
    std::vector<BigInt> available_;
    std::vector<std::vector<Activation>> activations_;
};

/// Row-wise reachability: each up half-step moves a row by at most +1, each
/// down half-step by at most -1.
inline bool can_reach(const Partition& cur, const Partition& target, int ups, int downs) {
    const std::size_t len = std::max(cur.length(), target.length());
    for (std::size_t i = 0; i < len; ++i) {
        const int diff = target.row(i) - cur.row(i);
        if (diff > ups || -diff > downs) return false;
    }
    return true;
}

inline bool can_reach(const State& cur, const State& target, int ups, int downs) {
    if (!can_reach(cur.iota, target.iota, ups, downs)) return false;
    for (std::size_t i = 0; i < cur.pinned.size(); ++i)
        if (!can_reach(cur.pinned[i], target.pinned[i], ups, downs)) return false;
    if (!target.fresh.empty()) return true;
    for (const auto& [d, p] : cur.fresh)
        if (p.row(0) > downs) return false;
    return true;
}

struct Trace {
    std::size_t states = 0;
    std::size_t margin_violations = 0;
};

inline bool first_row_margin_holds(const Partition& p) { return p.row(0) - 1 >= p.row(1); }

/// Forward propagation over m zigzag steps starting at `start`. When `target`
/// is given, states that cannot reach it are dropped.
inline Layer propagate(const Engine& engine, const State& start, int m, const State* target = nullptr,
                       Trace* trace = nullptr, bool check_margin = false) {
    Layer layer{{start, BigInt(1)}};
    const int base_norm = engine.norm(start);
    auto note = [&](const State& s) {
        if (!trace) return;
        ++trace->states;
        if (check_margin && !first_row_margin_holds(s.iota)) ++trace->margin_violations;
    };
    for (int step = 1; step <= m; ++step) {
        Layer lowered;
        for (const auto& [s, w] : layer) {
            for (auto& t : engine.down(s)) {
                if (target && !can_reach(t, *target, m - step + 1, m - step)) continue;
                lowered[std::move(t)] += w;
            }
        }
        for (const auto& [s, w] : lowered) note(s);
        Layer raised;
        for (const auto& [s, w] : lowered) {
            for (auto& [t, wt] : engine.up(s, base_norm + step)) {
                if (target && !can_reach(t, *target, m - step, m - step)) continue;
                raised[std::move(t)] += w * wt;
            }
        }
        for (const auto& [s, w] : raised) note(s);
        layer = std::move(raised);
    }
    return layer;
}

// Pins every non-iota key of the given labels.
struct PinnedFrame {
    std::vector<CuspidalKey> keys;

    explicit PinnedFrame(std::initializer_list<const LabelFunction*> labels) {
        for (const LabelFunction* f : labels)
            for (const auto& [k, p] : f->entries())
                if (!k.is_iota()) keys.push_back(k);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    }

    std::vector<int> degrees() const {
        std::vector<int> d;
        for (const auto& k : keys) d.push_back(k.degree);
        return d;
    }

    State to_state(const LabelFunction& f) const {
        State s;
        s.iota = f.iota();
        for (const auto& k : keys) s.pinned.push_back(f.at(k));
        for (const auto& [k, p] : f.entries()) {
            if (k.is_iota()) continue;
            if (!std::binary_search(keys.begin(), keys.end(), k)) s.fresh.emplace_back(k.degree, p);
        }
        std::sort(s.fresh.begin(), s.fresh.end());
        return s;
    }

    /// Fresh entries become ANON keys with slots above any ANON slot in use.
    LabelFunction to_label(const State& s) const {
        LabelFunction f;
        f.set(CuspidalKey::iota(), s.iota);
        std::map<int, int> next_slot;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            f.set(keys[i], s.pinned[i]);
            if (keys[i].kind == CuspidalKind::Anon)
                next_slot[keys[i].degree] = std::max(next_slot[keys[i].degree], keys[i].slot + 1);
        }
        for (const auto& [d, p] : s.fresh) f.set(CuspidalKey::anon(d, next_slot[d]++), p);
        return f;
    }
};

}  // namespace zigzag

struct ZigzagCount {
    BigInt count;
    std::size_t states = 0;
    std::size_t margin_violations = 0;
};

/// Number of zigzag paths from nu to mu over the cuspidal pool at q. Keys
/// other than iota are concrete cuspidals: equal keys in nu and mu denote the
/// same cuspidal, distinct keys distinct ones. With check_margin set, every
/// visited iota partition is tested for row1 - 1 >= row2.
inline ZigzagCount count_zigzag_traced(const LabelFunction& nu, const LabelFunction& mu, int m, std::uint64_t q,
                                       bool check_margin = false) {
    require_prime_power(q);
    if (m < 0 || mu.norm() - nu.norm() != m)
        throw SizeMismatch("count_zigzag: |mu| - |nu| = " + std::to_string(mu.norm() - nu.norm()) +
                           " but m = " + std::to_string(m));
    zigzag::PinnedFrame frame{&nu, &mu};
    zigzag::Engine engine(q, frame.degrees(), std::max(mu.norm(), 1));
    const zigzag::State start = frame.to_state(nu);
    const zigzag::State target = frame.to_state(mu);
    zigzag::Trace trace;
    zigzag::Layer final = zigzag::propagate(engine, start, m, &target, &trace, check_margin);
    ZigzagCount out;
    auto it = final.find(target);
    out.count = it == final.end() ? BigInt(0) : it->second;
    out.states = trace.states;
    out.margin_violations = trace.margin_violations;
    return out;
}

inline BigInt count_zigzag(const LabelFunction& nu, const LabelFunction& mu, int m, std::uint64_t q) {
    return count_zigzag_traced(nu, mu, m, q).count;
}

/// One term of a one-step restriction: every concrete nu in the class of
/// `nu` (relative to the support of the restricted label) occurs with
/// `multiplicity`; `class_size` counts those concrete nu.
struct RestrictionTerm {
    LabelFunction nu;
    BigInt multiplicity;
    BigInt class_size;
};

/// Restriction of phi(mu) from G_n to G_{n-1}: counts lambda with
/// nu --> lambda +-> mu, grouped by class of nu.
inline std::vector<RestrictionTerm> restrict_step(const LabelFunction& mu, std::uint64_t q) {
    require_prime_power(q);
    if (mu.norm() < 1) throw BadParameters("restrict_step: norm must be at least 1");
    zigzag::PinnedFrame frame{&mu};
    zigzag::Engine engine(q, frame.degrees(), mu.norm());
    // The one-step relation is symmetric: mu --> lambda +-> nu.
    zigzag::Layer totals;
    for (const auto& lambda : engine.down(frame.to_state(mu)))
        for (auto& [nu, w] : engine.up(lambda, mu.norm() - 1)) totals[std::move(nu)] += w;
    std::vector<RestrictionTerm> out;
    for (const auto& [s, w] : totals) {
        BigInt cls = engine.class_size(s);
        out.push_back({frame.to_label(s), divide_exact(w, cls, "restrict_step"), std::move(cls)});
    }
    return out;
}

struct DecompositionEntry {
    LabelShape shape;  // stable label
    BigInt multiplicity;
    BigInt class_size;
    BigInt degree;  // of phi(shape[n])
};

/// k[G_n / G_{n-m}] over k, in stable coordinates. Each concrete label in the
/// class of `shape` occurs with `multiplicity`.
struct Decomposition {
    int n = 0;
    int m = 0;
    std::uint64_t q = 2;
    std::vector<DecompositionEntry> entries;

    BigInt sum_squares() const {
        BigInt s = 0;
        for (const auto& e : entries) s += e.multiplicity * e.multiplicity * e.class_size;
        return s;
    }

    BigInt dimension() const {
        BigInt s = 0;
        for (const auto& e : entries) s += e.multiplicity * e.degree * e.class_size;
        return s;
    }

    const DecompositionEntry* find(const LabelShape& stable) const {
        for (const auto& e : entries)
            if (e.shape == stable) return &e;
        return nullptr;
    }

    BigInt multiplicity(const LabelShape& stable) const {
        const auto* e = find(stable);
        return e ? e->multiplicity : BigInt(0);
    }
};

inline void validate_decompose_parameters(int n, int m, std::uint64_t q) {
    if (m < 0 || m > n) throw BadParameters("decompose: need 0 <= m <= n");
    if (q < 2) throw BadParameters("decompose: q must be at least 2");
    require_prime_power(q);
}

inline Decomposition finish_decomposition(int n, int m, std::uint64_t q, std::vector<DecompositionEntry> entries) {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.shape < b.shape; });
    return Decomposition{n, m, q, std::move(entries)};
}

/// Decomposition of k[G_n/G_{n-m}] = Ind(trivial of G_{n-m}). A single
/// forward pass from the trivial label of G_{n-m} yields, for every class of
/// endpoints, the total number of concrete paths; dividing by the class size
/// gives the multiplicity of each member.
inline Decomposition decompose_perm_module(int n, int m, std::uint64_t q) {
    validate_decompose_parameters(n, m, q);
    zigzag::Engine engine(q, {}, n);
    zigzag::State start;
    start.iota = trivial_label(n - m).iota();
    std::vector<DecompositionEntry> entries;
    for (const auto& [s, w] : zigzag::propagate(engine, start, m)) {
        LabelShape full;
        full.iota = s.iota;
        for (const auto& [d, p] : s.fresh) full.add(d, p);
        BigInt cls = engine.class_size(s);
        BigInt mult = divide_exact(w, cls, "decompose_perm_module");
        entries.push_back({stable_shape(full), std::move(mult), std::move(cls), degree(full, q)});
    }
    return finish_decomposition(n, m, q, std::move(entries));
}

/// Stable labels lambda with |lambda| <= 2m, lambda_1 <= m and lambda[n] defined.
inline std::vector<LabelShape> decomposition_candidates(int n, int m, std::uint64_t q, int max_norm) {
    std::vector<LabelShape> out;
    for (int k = 0; k <= max_norm; ++k) {
        for (auto& [shape, cls] : enumerate_labels(k, q, max_norm)) {
            if (shape.iota.row(0) > m) continue;
            if (n < shape.norm() + shape.iota.row(0)) continue;
            out.push_back(shape);
        }
    }
    return out;
}

/// Same decomposition by counting zigzag paths to one representative of each
/// candidate stable label.
inline Decomposition decompose_by_candidates(int n, int m, std::uint64_t q) {
    validate_decompose_parameters(n, m, q);
    const LabelFunction nu = trivial_label(n - m);
    std::vector<DecompositionEntry> entries;
    for (const auto& shape : decomposition_candidates(n, m, q, 2 * m)) {
        const LabelShape full = pad(shape, n);
        BigInt c = count_zigzag(nu, full.to_label(), m, q);
        if (c == 0) continue;
        entries.push_back({shape, std::move(c), class_size(shape, q), degree(full, q)});
    }
    return finish_decomposition(n, m, q, std::move(entries));
}

}  // namespace glperm
