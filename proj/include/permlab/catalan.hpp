#pragma once

#include <memory>
#include <vector>

#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"

namespace permlab {

struct BinaryNode;

// Immutable binary tree; an empty tree is a valid value. Left/right children
// are distinguished even when only one is present.
class BinaryTree {
public:
    BinaryTree() = default;
    static BinaryTree node(BinaryTree left, BinaryTree right);
    static BinaryTree leaf() { return node({}, {}); }

    bool empty() const { return n_ == nullptr; }
    const BinaryTree& left() const;
    const BinaryTree& right() const;
    int size() const { return empty() ? 0 : 1 + left().size() + right().size(); }

    bool operator==(const BinaryTree& o) const {
        if (empty() || o.empty()) return empty() == o.empty();
        return left() == o.left() && right() == o.right();
    }

private:
    std::shared_ptr<const BinaryNode> n_;
};

struct BinaryNode {
    BinaryTree l, r;
};

inline BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
    BinaryTree t;
    t.n_ = std::make_shared<const BinaryNode>(BinaryNode{std::move(left), std::move(right)});
    return t;
}

inline const BinaryTree& BinaryTree::left() const { return n_->l; }
inline const BinaryTree& BinaryTree::right() const { return n_->r; }

// Rooted plane tree with ordered children.
struct PlaneTree {
    std::vector<PlaneTree> children;

    int size() const {
        int s = 1;
        for (const auto& c : children) s += c.size();
        return s;
    }
    bool operator==(const PlaneTree&) const = default;
};

// The Av(231) <-> binary tree bijection: the root carries the maximum, the
// left subtree the prefix before it, the right subtree the standardized
// suffix after it.
Permutation binary_to_av231(const BinaryTree& t);
BinaryTree av231_to_binary(const Permutation& sigma);  // throws with a 231 witness

// The Av(321) <-> plane tree bijection (|T| = n+1 vertices, |sigma| = n):
// leaves read in pre-order provide (pre-order-from-0, post-order-from-1)
// label pairs (s_i, q_i); sigma(q_i) = s_i and the rest fills increasingly.
Permutation plane_tree_to_av321(const PlaneTree& t);
PlaneTree av321_to_plane_tree(const Permutation& sigma);  // throws with a 321 witness

// E^+(sigma) = {i : sigma(i) >= i}.
std::vector<int> weak_excedance_set(const Permutation& sigma);

// Exactly uniform samplers.
BinaryTree uniform_binary_tree(int n, Rng& rng);            // via uniform Dyck word + cycle lemma
PlaneTree uniform_plane_tree(int vertices, Rng& rng);       // conditioned Geometric(1/2) GW tree
PlaneTree uniform_plane_tree(int vertices, Rng& rng, long long& tries);

Permutation sample_av231(int n, Rng& rng);
Permutation sample_av321(int n, Rng& rng);

// Exhaustive generators (small sizes; for roundtrip tests).
std::vector<BinaryTree> enumerate_binary_trees(int n);
std::vector<PlaneTree> enumerate_plane_trees(int vertices);

// Ulam-Harris style spine statistics used by the record-correspondence checks:
// length of the all-left (1...1) and all-right (2...2) chains from the root.
int left_spine_length(const BinaryTree& t);
int right_spine_length(const BinaryTree& t);

}  // namespace permlab
