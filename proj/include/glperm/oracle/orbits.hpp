#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "glperm/numeric.hpp"

namespace glperm::oracle {

struct ActionNotClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finite set of 64-bit keys, sorted for lookup.
class IndexedSpace {
public:
    IndexedSpace() = default;
    explicit IndexedSpace(std::vector<std::uint64_t> keys) : keys_(std::move(keys)) {
        std::sort(keys_.begin(), keys_.end());
        keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
    }

    std::size_t size() const noexcept { return keys_.size(); }
    std::uint64_t key(std::size_t i) const { return keys_[i]; }
    const std::vector<std::uint64_t>& keys() const noexcept { return keys_; }

    std::optional<std::size_t> index_of(std::uint64_t k) const {
        auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
        if (it == keys_.end() || *it != k) return std::nullopt;
        return static_cast<std::size_t>(it - keys_.begin());
    }

private:
    std::vector<std::uint64_t> keys_;
};

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
        std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        --components_;
        return true;
    }

    std::size_t components() const noexcept { return components_; }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> rank_;
    std::size_t components_;
};

using KeyAction = std::function<std::uint64_t(std::uint64_t)>;

/// Orbit of each point (as a root index) under the group generated by
/// `generators`. Every generator must map the space into itself.
template <class Space>
std::vector<std::uint32_t> orbit_labels(const Space& space, const std::vector<KeyAction>& generators) {
    if (space.size() > std::numeric_limits<std::uint32_t>::max()) throw GuardExceeded("orbit_labels: space too large");
    UnionFind uf(space.size());
    for (const auto& g : generators) {
        for (std::size_t i = 0; i < space.size(); ++i) {
            auto j = space.index_of(g(space.key(i)));
            if (!j) throw ActionNotClosed("generator maps a point outside the space");
            uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(*j));
        }
    }
    std::vector<std::uint32_t> labels(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) labels[i] = uf.find(static_cast<std::uint32_t>(i));
    return labels;
}

template <class Space>
std::size_t orbit_count(const Space& space, const std::vector<KeyAction>& generators) {
    const auto labels = orbit_labels(space, generators);
    std::size_t n = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == i) ++n;
    return n;
}

/// Burnside count: average number of fixed points over every group element.
template <class Space>
std::size_t burnside_orbit_count(const Space& space, const std::vector<KeyAction>& group) {
    if (group.empty()) throw BadParameters("burnside_orbit_count: empty group");
    BigInt fixed = 0;
    for (const auto& h : group)
        for (std::size_t i = 0; i < space.size(); ++i)
            if (h(space.key(i)) == space.key(i)) ++fixed;
    return divide_exact(fixed, BigInt(group.size()), "burnside_orbit_count").template convert_to<std::size_t>();
}

}  // namespace glperm::oracle
