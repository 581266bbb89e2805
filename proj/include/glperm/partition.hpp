#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "glperm/numeric.hpp"

namespace glperm {

/// A partition stored in canonical form: positive, weakly decreasing rows.
/// Rows beyond the stored length read as 0.
class Partition {
public:
    Partition() = default;

    /// Accepts trailing zeros and strips them; rejects negative or increasing rows.
    explicit Partition(std::vector<int> rows) : rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] <= 0 || (i > 0 && rows_[i] > rows_[i - 1]))
                throw std::invalid_argument("partition rows must be positive and weakly decreasing: " +
                                            format(rows_));
        }
    }

    Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

    const std::vector<int>& rows() const noexcept { return rows_; }
    std::size_t length() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }

    int row(std::size_t i) const noexcept { return i < rows_.size() ? rows_[i] : 0; }

    int size() const noexcept {
        int s = 0;
        for (int r : rows_) s += r;
        return s;
    }

    Partition transpose() const {
        std::vector<int> cols(rows_.empty() ? 0 : static_cast<std::size_t>(rows_.front()), 0);
        for (int r : rows_)
            for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
        return Partition(std::move(cols));
    }

    std::string to_string() const { return format(rows_); }

    friend bool operator==(const Partition&, const Partition&) = default;

    // Total order: by size, then lexicographically on rows.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return std::lexicographical_compare_three_way(a.rows_.begin(), a.rows_.end(), b.rows_.begin(),
                                                      b.rows_.end());
    }

private:
    static std::string format(const std::vector<int>& rows) {
        std::string s = "(";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(rows[i]);
        }
        return s + ")";
    }

    // Unchecked construction for generators that already produce canonical rows.
    struct unchecked_t {};
    Partition(unchecked_t, std::vector<int> rows) : rows_(std::move(rows)) {}

    friend Partition make_partition_unchecked(std::vector<int> rows);

    std::vector<int> rows_;
};

inline Partition make_partition_unchecked(std::vector<int> rows) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(Partition::unchecked_t{}, std::move(rows));
}

inline int size(const Partition& p) { return p.size(); }

/// lambda +-> mu: mu is lambda with at most one box added to each row.
inline bool arrow_up(const Partition& lambda, const Partition& mu) {
    const std::size_t len = std::max(lambda.length(), mu.length());
    for (std::size_t i = 0; i < len; ++i) {
        if (mu.row(i) < lambda.row(i) || mu.row(i) > lambda.row(i) + 1) return false;
    }
    return true;
}

/// mu --> lambda: lambda is mu with at most one box removed from each row.
inline bool arrow_down(const Partition& mu, const Partition& lambda) {
    const std::size_t len = std::max(lambda.length(), mu.length());
    for (std::size_t i = 0; i < len; ++i) {
        if (lambda.row(i) < mu.row(i) - 1 || lambda.row(i) > mu.row(i)) return false;
    }
    return true;
}

namespace detail {

inline void down_set_rec(const Partition& mu, std::size_t i, std::vector<int>& cur, std::vector<Partition>& out) {
    if (i == mu.length()) {
        out.push_back(make_partition_unchecked(cur));
        return;
    }
    const int r = mu.row(i);
    for (int v : {r, r - 1}) {
        if (i > 0 && v > cur[i - 1]) continue;
        cur.push_back(v);
        down_set_rec(mu, i + 1, cur, out);
        cur.pop_back();
    }
}

inline void up_steps_rec(const Partition& lambda, std::size_t i, int budget, std::vector<int>& cur,
                         std::vector<Partition>& out) {
    if (i == lambda.length()) {
        // New rows of length one, any number up to the budget.
        std::vector<int> tail = cur;
        out.push_back(make_partition_unchecked(tail));
        for (int k = 1; k <= budget; ++k) {
            tail.push_back(1);
            out.push_back(make_partition_unchecked(tail));
        }
        return;
    }
    const int r = lambda.row(i);
    for (int v : {r, r + 1}) {
        const int cost = v - r;
        if (cost > budget) continue;
        if (i > 0 && v > cur[i - 1]) continue;
        cur.push_back(v);
        up_steps_rec(lambda, i + 1, budget - cost, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// All lambda with mu --> lambda, sorted by the partition order.
inline std::vector<Partition> down_set(const Partition& mu) {
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::down_set_rec(mu, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// All mu with lambda +-> mu adding at most max_added boxes, sorted.
inline std::vector<Partition> up_steps(const Partition& lambda, int max_added) {
    std::vector<Partition> out;
    if (max_added < 0) return out;
    std::vector<int> cur;
    detail::up_steps_rec(lambda, 0, max_added, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// All mu with lambda +-> mu and |mu| = target_size. The raw relation has
/// infinite up-sets (any number of new length-one rows), hence the size cap.
inline std::vector<Partition> up_set(const Partition& lambda, int target_size) {
    std::vector<Partition> out;
    const int need = target_size - lambda.size();
    if (need < 0) return out;
    for (auto& mu : up_steps(lambda, need))
        if (mu.size() == target_size) out.push_back(std::move(mu));
    return out;
}

/// Hook lengths of all boxes, in decreasing order.
inline std::vector<int> hooks(const Partition& lambda) {
    const Partition t = lambda.transpose();
    std::vector<int> h;
    h.reserve(static_cast<std::size_t>(lambda.size()));
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.row(i); ++j) {
            const int arm = lambda.row(i) - j - 1;
            const int leg = t.row(static_cast<std::size_t>(j)) - static_cast<int>(i) - 1;
            h.push_back(arm + leg + 1);
        }
    }
    std::sort(h.begin(), h.end(), std::greater<>());
    return h;
}

/// n(lambda) = sum (i-1) lambda_i.
inline int n_stat(const Partition& lambda) {
    int s = 0;
    for (std::size_t i = 0; i < lambda.length(); ++i) s += static_cast<int>(i) * lambda.row(i);
    return s;
}

inline constexpr int kDefaultPartitionBound = 60;

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(make_partition_unchecked(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// Partitions of n in reverse lexicographic order ((n) first, (1^n) last).
inline std::vector<Partition> partitions_of(int n, int bound = kDefaultPartitionBound) {
    if (n < 0) throw BadParameters("partitions_of: negative size");
    if (n > bound)
        throw BoundExceeded("partitions_of: n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

}  // namespace glperm
