#pragma once

// Persistent big-endian Patricia tree keyed by unsigned 64-bit integers.
// Insertion copies only the path to the updated leaf, so extended maps share
// structure with the original and copies are O(1).

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace scopefoil {

template <typename V>
class IntMap {
public:
    using Key = std::uint64_t;

    IntMap() = default;

    [[nodiscard]] bool empty() const noexcept { return root_ == nullptr; }
    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    [[nodiscard]] const V* find(Key key) const noexcept {
        const Node* node = root_.get();
        while (node != nullptr) {
            if (node->is_leaf()) {
                return node->key == key ? &*node->value : nullptr;
            }
            if (!match_prefix(key, node->key, node->mask)) {
                return nullptr;
            }
            node = zero_bit(key, node->mask) ? node->left.get() : node->right.get();
        }
        return nullptr;
    }

    [[nodiscard]] bool contains(Key key) const noexcept { return find(key) != nullptr; }

    /// Returns a new map with `key` bound to `value`, replacing any previous binding.
    [[nodiscard]] IntMap insert(Key key, V value) const {
        bool added = false;
        IntMap result;
        result.root_ = insert_rec(root_, key, std::move(value), added);
        result.size_ = size_ + (added ? 1 : 0);
        return result;
    }

    /// Visits bindings in increasing key order.
    template <typename F>
    void for_each(F&& visit) const {
        for_each_rec(root_.get(), visit);
    }

    [[nodiscard]] std::vector<Key> keys() const {
        std::vector<Key> out;
        out.reserve(size_);
        for_each([&](Key k, const V&) { out.push_back(k); });
        return out;
    }

    /// True when both maps share the same root (cheap identity test).
    [[nodiscard]] bool same_root(const IntMap& other) const noexcept { return root_ == other.root_; }

private:
    struct Node;
    using Ptr = std::shared_ptr<const Node>;

    // Leaves use `key`/`value`; branches use `key` as the prefix and `mask` as
    // the branching bit.
    struct Node {
        Key key = 0;
        Key mask = 0;
        std::optional<V> value;
        Ptr left;
        Ptr right;

        [[nodiscard]] bool is_leaf() const noexcept { return value.has_value(); }
    };

    static Key highest_bit(Key x) noexcept {
        return Key{1} << (63 - __builtin_clzll(x));
    }
    static Key mask_prefix(Key key, Key mask) noexcept { return key & ~((mask << 1) - 1); }
    static bool match_prefix(Key key, Key prefix, Key mask) noexcept {
        return mask == (Key{1} << 63) ? true : mask_prefix(key, mask) == prefix;
    }
    static bool zero_bit(Key key, Key mask) noexcept { return (key & mask) == 0; }

    static Ptr leaf(Key key, V value) {
        auto node = std::make_shared<Node>();
        node->key = key;
        node->value.emplace(std::move(value));
        return node;
    }

    static Ptr branch(Key prefix, Key mask, Ptr left, Ptr right) {
        auto node = std::make_shared<Node>();
        node->key = prefix;
        node->mask = mask;
        node->left = std::move(left);
        node->right = std::move(right);
        return node;
    }

    static Ptr join(Key p0, Ptr t0, Key p1, Ptr t1) {
        const Key mask = highest_bit(p0 ^ p1);
        const Key prefix = mask == (Key{1} << 63) ? 0 : mask_prefix(p0, mask);
        if (zero_bit(p0, mask)) {
            return branch(prefix, mask, std::move(t0), std::move(t1));
        }
        return branch(prefix, mask, std::move(t1), std::move(t0));
    }

    static Ptr insert_rec(const Ptr& node, Key key, V value, bool& added) {
        if (!node) {
            added = true;
            return leaf(key, std::move(value));
        }
        if (node->is_leaf()) {
            if (node->key == key) {
                return leaf(key, std::move(value));
            }
            added = true;
            return join(key, leaf(key, std::move(value)), node->key, node);
        }
        if (!match_prefix(key, node->key, node->mask)) {
            added = true;
            return join(key, leaf(key, std::move(value)), node->key, node);
        }
        if (zero_bit(key, node->mask)) {
            return branch(node->key, node->mask, insert_rec(node->left, key, std::move(value), added),
                          node->right);
        }
        return branch(node->key, node->mask, node->left,
                      insert_rec(node->right, key, std::move(value), added));
    }

    template <typename F>
    static void for_each_rec(const Node* node, F& visit) {
        if (node == nullptr) {
            return;
        }
        if (node->is_leaf()) {
            visit(node->key, *node->value);
            return;
        }
        for_each_rec(node->left.get(), visit);
        for_each_rec(node->right.get(), visit);
    }

    Ptr root_;
    std::size_t size_ = 0;
};

}  // namespace scopefoil
