#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "glperm/numeric.hpp"
#include "glperm/partition.hpp"
#include "glperm/qpoly.hpp"

namespace glperm {

enum class CuspidalKind : std::uint8_t { Iota = 0, Anon = 1, Named = 2 };

/// Address of a cuspidal representation. Concrete identities are never
/// materialized: IOTA is the trivial character of GL_1, ANON slots are
/// interchangeable same-degree cuspidals, NAMED tokens pin a specific one.
struct CuspidalKey {
    int degree = 1;
    CuspidalKind kind = CuspidalKind::Iota;
    int slot = 0;

    static constexpr CuspidalKey iota() { return {1, CuspidalKind::Iota, 0}; }
    static CuspidalKey anon(int degree, int slot) { return make(degree, CuspidalKind::Anon, slot); }
    static CuspidalKey named(int degree, int token) { return make(degree, CuspidalKind::Named, token); }

    bool is_iota() const noexcept { return kind == CuspidalKind::Iota; }

    friend auto operator<=>(const CuspidalKey&, const CuspidalKey&) = default;

private:
    static CuspidalKey make(int degree, CuspidalKind kind, int slot) {
        if (degree < 1) throw BadParameters("cuspidal degree must be positive");
        return {degree, kind, slot};
    }
};

/// Number of ways to place a multiset of partitions on distinct cuspidals
/// drawn from a pool of `available`: falling(available, k) / prod mult!.
/// `parts` must be sorted.
inline BigInt count_assignments(const BigInt& available, std::span<const Partition> parts) {
    BigInt r = falling_factorial(available, static_cast<unsigned>(parts.size()));
    if (r == 0) return 0;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        r /= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return r;
}

/// Available non-iota cuspidals of degree d at field size q.
inline BigInt non_iota_cuspidals(int d, std::uint64_t q) {
    if (d == 1) return BigInt(q) - 2;
    return cuspidal_count(d, q);
}

class LabelFunction;

/// A label function up to permutation of same-degree non-iota cuspidals.
/// `others[d]` is the sorted multiset of partitions on degree-d cuspidals
/// other than iota; no empty partitions, no empty degree buckets.
struct LabelShape {
    Partition iota;
    std::map<int, std::vector<Partition>> others;

    void add(int degree, Partition p) {
        if (p.empty()) return;
        auto& v = others[degree];
        v.insert(std::upper_bound(v.begin(), v.end(), p), std::move(p));
    }

    int norm() const {
        int s = iota.size();
        for (const auto& [d, parts] : others)
            for (const auto& p : parts) s += d * p.size();
        return s;
    }

    bool has_others() const noexcept { return !others.empty(); }

    LabelFunction to_label() const;

    std::string to_string() const;

    friend bool operator==(const LabelShape&, const LabelShape&) = default;
    friend auto operator<=>(const LabelShape& a, const LabelShape& b) {
        if (auto c = a.norm() <=> b.norm(); c != 0) return c;
        if (auto c = a.iota <=> b.iota; c != 0) return c;
        return a.others <=> b.others;
    }
};

/// Finitely supported function from cuspidals to partitions. Absent keys
/// carry the empty partition; empty partitions are never stored.
class LabelFunction {
public:
    using Map = std::map<CuspidalKey, Partition>;

    LabelFunction() = default;
    LabelFunction(std::initializer_list<std::pair<const CuspidalKey, Partition>> init) {
        for (const auto& [k, p] : init) set(k, p);
    }

    const Map& entries() const noexcept { return entries_; }

    const Partition& at(const CuspidalKey& k) const {
        static const Partition empty_partition;
        auto it = entries_.find(k);
        return it == entries_.end() ? empty_partition : it->second;
    }

    const Partition& iota() const { return at(CuspidalKey::iota()); }

    void set(const CuspidalKey& k, Partition p) {
        if (k.kind == CuspidalKind::Iota && k.degree != 1) throw BadParameters("iota has degree 1");
        if (p.empty())
            entries_.erase(k);
        else
            entries_[k] = std::move(p);
    }

    bool empty() const noexcept { return entries_.empty(); }

    int norm() const {
        int s = 0;
        for (const auto& [k, p] : entries_) s += k.degree * p.size();
        return s;
    }

    LabelShape shape() const {
        LabelShape s;
        for (const auto& [k, p] : entries_) {
            if (k.is_iota())
                s.iota = p;
            else
                s.add(k.degree, p);
        }
        return s;
    }

    /// Re-slot ANON keys within each degree in partition order.
    LabelFunction canonical() const {
        LabelFunction out;
        std::map<int, std::vector<Partition>> anon;
        for (const auto& [k, p] : entries_) {
            if (k.kind == CuspidalKind::Anon)
                anon[k.degree].push_back(p);
            else
                out.entries_.emplace(k, p);
        }
        for (auto& [d, parts] : anon) {
            std::sort(parts.begin(), parts.end());
            for (std::size_t i = 0; i < parts.size(); ++i)
                out.entries_.emplace(CuspidalKey::anon(d, static_cast<int>(i)), std::move(parts[i]));
        }
        return out;
    }

    std::string to_string() const { return shape().to_string(); }

    friend bool operator==(const LabelFunction&, const LabelFunction&) = default;
    friend auto operator<=>(const LabelFunction&, const LabelFunction&) = default;

private:
    Map entries_;
};

/// The lambda of the padded construction lambda[n]; its iota partition is the
/// stable tail (without the padded first row).
using StableLabel = LabelFunction;

inline LabelFunction LabelShape::to_label() const {
    LabelFunction f;
    f.set(CuspidalKey::iota(), iota);
    for (const auto& [d, parts] : others)
        for (std::size_t i = 0; i < parts.size(); ++i) f.set(CuspidalKey::anon(d, static_cast<int>(i)), parts[i]);
    return f;
}

inline std::string LabelShape::to_string() const {
    std::string s;
    if (!iota.empty() || others.empty()) s = "ι:" + iota.to_string();
    for (const auto& [d, parts] : others) {
        std::size_t i = 0;
        while (i < parts.size()) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            if (!s.empty()) s += "; ";
            s += std::to_string(d) + ":" + parts[i].to_string() + "x" + std::to_string(j - i);
            i = j;
        }
    }
    return s;
}

inline int norm(const LabelFunction& mu) { return mu.norm(); }

struct PadUndefined : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPadded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// lambda[n]: prepend the row n - |lambda| to the iota partition.
inline LabelFunction pad(const StableLabel& lambda, int n) {
    const int nrm = lambda.norm();
    const int first = lambda.iota().row(0);
    if (n < nrm + first)
        throw PadUndefined("pad: n = " + std::to_string(n) + " < |lambda| + lambda_1 = " +
                           std::to_string(nrm + first));
    LabelFunction out = lambda;
    std::vector<int> rows{n - nrm};
    for (int r : lambda.iota().rows()) rows.push_back(r);
    out.set(CuspidalKey::iota(), Partition(std::move(rows)));
    return out;
}

inline LabelShape pad(const LabelShape& lambda, int n) { return pad(lambda.to_label(), n).shape(); }

/// Inverse of pad: the unique (lambda, n) with pad(lambda, n) == mu.
inline std::pair<StableLabel, int> stabilize(const LabelFunction& mu) {
    const int n = mu.norm();
    StableLabel lambda = mu;
    const auto& rows = mu.iota().rows();
    std::vector<int> tail;
    if (rows.size() > 1) tail.assign(rows.begin() + 1, rows.end());
    lambda.set(CuspidalKey::iota(), Partition(std::move(tail)));
    LabelFunction back;
    try {
        back = pad(lambda, n);
    } catch (const PadUndefined&) {
        throw NotPadded("stabilize: label is not of the form lambda[n]");
    }
    if (!(back == mu)) throw NotPadded("stabilize: reconstruction mismatch");
    return {lambda, n};
}

inline LabelShape stable_shape(const LabelShape& full) { return stabilize(full.to_label()).first.shape(); }

/// Increment the first row of the iota partition; (0,0,...) becomes (1).
inline LabelFunction tilde(const LabelFunction& mu) {
    LabelFunction out = mu;
    std::vector<int> rows = mu.iota().rows();
    if (rows.empty())
        rows.push_back(1);
    else
        ++rows.front();
    out.set(CuspidalKey::iota(), Partition(std::move(rows)));
    return out;
}

/// The label of the trivial representation of G_n.
inline LabelFunction trivial_label(int n) {
    if (n < 0) throw BadParameters("trivial_label: negative n");
    LabelFunction f;
    if (n > 0) f.set(CuspidalKey::iota(), Partition{n});
    return f;
}

namespace detail {

template <class Pred>
bool keywise(const LabelFunction& a, const LabelFunction& b, Pred pred) {
    for (const auto& [k, p] : a.entries())
        if (!pred(p, b.at(k))) return false;
    for (const auto& [k, p] : b.entries())
        if (!a.entries().contains(k) && !pred(Partition{}, p)) return false;
    return true;
}

}  // namespace detail

inline bool arrow_up(const LabelFunction& a, const LabelFunction& b) {
    return detail::keywise(a, b, [](const Partition& x, const Partition& y) { return arrow_up(x, y); });
}

inline bool arrow_down(const LabelFunction& a, const LabelFunction& b) {
    return detail::keywise(a, b, [](const Partition& x, const Partition& y) { return arrow_down(x, y); });
}

/// Number of concrete label functions of the given shape at field size q.
inline BigInt class_size(const LabelShape& shape, std::uint64_t q) {
    BigInt r = 1;
    for (const auto& [d, parts] : shape.others) {
        r *= count_assignments(non_iota_cuspidals(d, q), parts);
        if (r == 0) return 0;
    }
    return r;
}

inline constexpr int kDefaultLabelCensusBound = 8;

namespace detail {

struct ShapeItem {
    int degree;
    Partition part;
};

inline void label_multisets(const std::vector<ShapeItem>& items, std::size_t from, int remaining,
                            LabelShape& cur, std::vector<LabelShape>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < items.size(); ++i) {
        const int cost = items[i].degree * items[i].part.size();
        if (cost > remaining) continue;
        LabelShape next = cur;
        next.add(items[i].degree, items[i].part);
        label_multisets(items, i, remaining - cost, next, out);
    }
}

}  // namespace detail

/// All shapes of norm n with their class sizes at q (zero classes dropped).
inline std::vector<std::pair<LabelShape, BigInt>> enumerate_labels(int n, std::uint64_t q,
                                                                   int bound = kDefaultLabelCensusBound) {
    if (n < 0) throw BadParameters("enumerate_labels: negative n");
    if (n > bound)
        throw BoundExceeded("enumerate_labels: n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    std::vector<detail::ShapeItem> items;
    for (int d = 1; d <= n; ++d)
        for (int s = 1; d * s <= n; ++s)
            for (auto& p : partitions_of(s)) items.push_back({d, p});

    std::vector<std::pair<LabelShape, BigInt>> out;
    for (int a = n; a >= 0; --a) {
        for (const auto& ip : partitions_of(a)) {
            LabelShape base;
            base.iota = ip;
            std::vector<LabelShape> shapes;
            detail::label_multisets(items, 0, n - a, base, shapes);
            for (auto& s : shapes) {
                BigInt c = class_size(s, q);
                if (c != 0) out.emplace_back(std::move(s), std::move(c));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

}  // namespace glperm
