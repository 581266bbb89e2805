#pragma once

// Plain zigzag enumeration over a fully materialized cuspidal pool. No
// symmetry reduction: every non-iota cuspidal of each relevant degree is a
// distinct NAMED key, and label functions are walked backwards from the
// target. Used to cross-check the reduced forward DP.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "glperm/branching.hpp"
#include "glperm/label.hpp"

namespace glperm::oracle {

class CuspidalPool {
public:
    static constexpr std::size_t kMaxPool = 4096;

    CuspidalPool(std::uint64_t q, int max_degree) : q_(q) {
        for (int d = 1; d <= max_degree; ++d) {
            const BigInt count = non_iota_cuspidals(d, q);
            if (count > BigInt(kMaxPool) || keys_.size() + count.convert_to<std::size_t>() > kMaxPool)
                throw GuardExceeded("cuspidal pool too large to materialize");
            const int c = count.convert_to<int>();
            for (int i = 0; i < c; ++i) keys_.push_back(CuspidalKey::named(d, i));
        }
    }

    std::uint64_t q() const noexcept { return q_; }
    const std::vector<CuspidalKey>& keys() const noexcept { return keys_; }

    /// Assigns every non-iota key of the labels a distinct pool cuspidal.
    std::map<CuspidalKey, CuspidalKey> embed(std::initializer_list<const LabelFunction*> labels) const {
        std::map<CuspidalKey, CuspidalKey> out;
        for (const LabelFunction* f : labels)
            for (const auto& [k, p] : f->entries())
                if (!k.is_iota()) out.emplace(k, k);
        std::map<int, int> used;
        for (auto& [from, to] : out) {
            const int idx = used[from.degree]++;
            bool found = false;
            int seen = 0;
            for (const auto& key : keys_) {
                if (key.degree != from.degree) continue;
                if (seen++ == idx) {
                    to = key;
                    found = true;
                    break;
                }
            }
            if (!found) throw BadParameters("label not realizable in the cuspidal pool at this q");
        }
        return out;
    }

private:
    std::uint64_t q_;
    std::vector<CuspidalKey> keys_;
};

inline LabelFunction relabel(const LabelFunction& f, const std::map<CuspidalKey, CuspidalKey>& keys) {
    LabelFunction out;
    for (const auto& [k, p] : f.entries()) out.set(k.is_iota() ? k : keys.at(k), p);
    return out;
}

/// All lambda with mu --> lambda, keywise.
inline std::vector<LabelFunction> concrete_down(const LabelFunction& mu) {
    std::vector<LabelFunction> out{LabelFunction{}};
    for (const auto& [k, p] : mu.entries()) {
        std::vector<LabelFunction> next;
        for (const auto& f : out)
            for (const auto& lam : down_set(p)) {
                LabelFunction g = f;
                g.set(k, lam);
                next.push_back(std::move(g));
            }
        out = std::move(next);
    }
    return out;
}

namespace detail {

inline void concrete_up_rec(const std::vector<CuspidalKey>& keys, std::size_t i, const LabelFunction& lambda,
                            int budget, LabelFunction& cur, std::vector<LabelFunction>& out) {
    if (i == keys.size()) {
        if (budget == 0) out.push_back(cur);
        return;
    }
    const CuspidalKey& k = keys[i];
    const Partition& base = lambda.at(k);
    for (const auto& p : up_steps(base, budget / k.degree)) {
        cur.set(k, p);
        concrete_up_rec(keys, i + 1, lambda, budget - k.degree * (p.size() - base.size()), cur, out);
    }
    cur.set(k, base);
}

}  // namespace detail

/// All x with lambda +-> x and norm(x) == target_norm, over iota and the pool.
inline std::vector<LabelFunction> concrete_up(const LabelFunction& lambda, int target_norm, const CuspidalPool& pool) {
    std::vector<LabelFunction> out;
    const int budget = target_norm - lambda.norm();
    if (budget < 0) return out;
    std::vector<CuspidalKey> keys{CuspidalKey::iota()};
    for (const auto& k : pool.keys())
        if (k.degree <= budget || !lambda.at(k).empty()) keys.push_back(k);
    for (const auto& [k, p] : lambda.entries())
        if (!k.is_iota() && std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    LabelFunction cur = lambda;
    detail::concrete_up_rec(keys, 0, lambda, budget, cur, out);
    return out;
}

class ConcreteZigzagCounter {
public:
    ConcreteZigzagCounter(const LabelFunction& nu, const CuspidalPool& pool) : nu_(nu), pool_(pool) {}

    /// Paths from nu to x in `steps` steps (requires norm(x) = norm(nu) + steps).
    BigInt count(const LabelFunction& x, int steps) {
        if (steps == 0) return x == nu_ ? 1 : 0;
        auto key = std::make_pair(x, steps);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigInt total = 0;
        for (const auto& lambda : concrete_down(x))
            for (const auto& below : concrete_up(lambda, x.norm() - 1, pool_)) total += count(below, steps - 1);
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    LabelFunction nu_;
    const CuspidalPool& pool_;
    std::map<std::pair<LabelFunction, int>, BigInt> memo_;
};

/// Number of zigzag paths by plain concrete enumeration.
inline BigInt count_zigzag_concrete(const LabelFunction& nu, const LabelFunction& mu, int m, std::uint64_t q) {
    if (m < 0 || mu.norm() - nu.norm() != m) throw SizeMismatch("count_zigzag_concrete: norm difference != m");
    CuspidalPool pool(q, std::max(mu.norm(), 1));
    const auto keys = pool.embed({&nu, &mu});
    ConcreteZigzagCounter counter(relabel(nu, keys), pool);
    return counter.count(relabel(mu, keys), m);
}

/// Explicit list of every zigzag path from nu to mu, in pool coordinates.
/// Exponential; intended for small instances.
inline std::vector<ZigzagPath> enumerate_zigzag_paths(const LabelFunction& nu, const LabelFunction& mu, int m,
                                                      const CuspidalPool& pool) {
    if (m < 1 || mu.norm() - nu.norm() != m) throw SizeMismatch("enumerate_zigzag_paths: norm difference != m");
    std::vector<ZigzagPath> out;
    ZigzagPath cur;
    auto rec = [&](auto&& self, const LabelFunction& below, int step) -> void {
        for (const auto& lambda : concrete_down(below)) {
            for (const auto& up : concrete_up(lambda, nu.norm() + step, pool)) {
                if (step == m && !(up == mu)) continue;
                cur.lambdas.push_back(lambda);
                cur.mus.push_back(up);
                if (step == m)
                    out.push_back(cur);
                else
                    self(self, up, step + 1);
                cur.lambdas.pop_back();
                cur.mus.pop_back();
            }
        }
    };
    rec(rec, nu, 1);
    return out;
}

}  // namespace glperm::oracle
