#include "permlab/catalan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permlab {

namespace {

[[noreturn]] void reject_with_witness(const Permutation& sigma, const Permutation& pattern,
                                      const char* what) {
    auto wit = find_occurrence(pattern, sigma);
    std::ostringstream msg;
    msg << what << ": contains " << pattern.to_string() << " at indices";
    if (wit)
        for (int i : *wit) msg << ' ' << i;
    throw std::invalid_argument(msg.str());
}

}  // namespace

Permutation binary_to_av231(const BinaryTree& t) {
    if (t.empty()) return Permutation{};
    Permutation left = binary_to_av231(t.left());
    Permutation right = binary_to_av231(t.right());
    std::vector<int> v;
    v.reserve(static_cast<size_t>(t.size()));
    for (int x : left.values()) v.push_back(x);
    v.push_back(t.size());
    for (int x : right.values()) v.push_back(x + left.size());
    return Permutation(std::move(v));
}

namespace {

BinaryTree av231_to_binary_rec(const std::vector<int>& vals, int lo, int hi, const Permutation& whole) {
    if (lo > hi) return BinaryTree{};
    int maxpos = lo;
    for (int i = lo; i <= hi; ++i)
        if (vals[static_cast<size_t>(i)] > vals[static_cast<size_t>(maxpos)]) maxpos = i;
    // left values must all be below right values, else a 231 occurs
    int left_max = 0;
    for (int i = lo; i < maxpos; ++i) left_max = std::max(left_max, vals[static_cast<size_t>(i)]);
    for (int j = maxpos + 1; j <= hi; ++j)
        if (vals[static_cast<size_t>(j)] < left_max)
            reject_with_witness(whole, Permutation::parse("231"), "av231_to_binary");
    return BinaryTree::node(av231_to_binary_rec(vals, lo, maxpos - 1, whole),
                            av231_to_binary_rec(vals, maxpos + 1, hi, whole));
}

}  // namespace

BinaryTree av231_to_binary(const Permutation& sigma) {
    return av231_to_binary_rec(sigma.values(), 0, sigma.size() - 1, sigma);
}

namespace {

void collect_leaf_labels(const PlaneTree& t, int& pre_counter, int& post_counter,
                         std::vector<std::pair<int, int>>& leaves) {
    int my_pre = pre_counter++;
    for (const auto& c : t.children) collect_leaf_labels(c, pre_counter, post_counter, leaves);
    int my_post = ++post_counter;
    if (t.children.empty()) leaves.push_back({my_pre, my_post});
}

}  // namespace

Permutation plane_tree_to_av321(const PlaneTree& t) {
    const int n = t.size() - 1;
    if (n == 0) return Permutation{};
    int pre = 0, post = 0;
    std::vector<std::pair<int, int>> leaves;  // (s_i, q_i) in pre-order
    collect_leaf_labels(t, pre, post, leaves);
    std::vector<int> vals(static_cast<size_t>(n), 0);
    std::vector<char> value_used(static_cast<size_t>(n) + 1, 0);
    for (auto [s, q] : leaves) {
        vals[static_cast<size_t>(q) - 1] = s;
        value_used[static_cast<size_t>(s)] = 1;
    }
    int next = 1;
    for (int i = 0; i < n; ++i) {
        if (vals[static_cast<size_t>(i)] != 0) continue;
        while (value_used[static_cast<size_t>(next)]) ++next;
        vals[static_cast<size_t>(i)] = next++;
    }
    return Permutation(std::move(vals));
}

std::vector<int> weak_excedance_set(const Permutation& sigma) {
    std::vector<int> e;
    for (int i = 1; i <= sigma.size(); ++i)
        if (sigma(i) >= i) e.push_back(i);
    return e;
}

PlaneTree av321_to_plane_tree(const Permutation& sigma) {
    const int n = sigma.size();
    if (n == 0) return PlaneTree{};
    std::vector<int> Q = weak_excedance_set(sigma);
    std::vector<int> S;
    S.reserve(Q.size());
    for (int q : Q) S.push_back(sigma(q));
    if (!std::is_sorted(S.begin(), S.end()))
        reject_with_witness(sigma, Permutation::parse("321"), "av321_to_plane_tree");
    const int k = static_cast<int>(Q.size());

    // Rebuild the tree whose leaves carry pre-order labels S and post-order
    // labels Q. Between consecutive leaves the construction pops
    // q_{i+1}-q_i-1 finished vertices and pushes s_{i+1}-s_i-1 fresh internal
    // ones; any inconsistency certifies a 321 occurrence.
    std::vector<std::vector<PlaneTree>> stack;  // children collected per open vertex
    stack.push_back({});                        // sentinel collecting the root
    auto push_vertex = [&stack]() { stack.push_back({}); };
    auto pop_vertex = [&stack]() {
        PlaneTree t{std::move(stack.back())};
        stack.pop_back();
        stack.back().push_back(std::move(t));
    };

    push_vertex();  // root, pre-order 0
    int prev_s = 0, prev_q = 0;
    int built = 1;
    for (int i = 0; i < k; ++i) {
        int pops = Q[static_cast<size_t>(i)] - prev_q - 1;
        int pushes = S[static_cast<size_t>(i)] - prev_s - 1;
        if (pops < 0 || pushes < 0 || pops > static_cast<int>(stack.size()) - 2)
            reject_with_witness(sigma, Permutation::parse("321"), "av321_to_plane_tree");
        for (int p = 0; p < pops; ++p) pop_vertex();
        for (int p = 0; p < pushes; ++p) push_vertex();
        push_vertex();  // the leaf itself
        pop_vertex();   // a leaf finishes immediately
        built += pushes + 1;
        prev_s = S[static_cast<size_t>(i)];
        prev_q = Q[static_cast<size_t>(i)];
    }
    // the open vertices still on the stack finish with post-orders
    // prev_q+1, ..., n+1; counts must match exactly
    if (built != n + 1 || n + 1 - prev_q != static_cast<int>(stack.size()) - 1)
        reject_with_witness(sigma, Permutation::parse("321"), "av321_to_plane_tree");
    while (stack.size() > 1) pop_vertex();
    return std::move(stack.front().front());
}

namespace {

// Unique rotation of a +-1 step sequence with total -1 whose proper prefix
// sums stay non-negative (cycle lemma).
int cycle_lemma_rotation(const std::vector<int>& steps) {
    int best_pos = 0;
    long long sum = 0, best = 0;
    for (size_t i = 0; i < steps.size(); ++i) {
        sum += steps[i];
        if (sum < best) {
            best = sum;
            best_pos = static_cast<int>(i) + 1;
        }
    }
    return best_pos % static_cast<int>(steps.size());
}

BinaryTree dyck_to_binary(const std::vector<int>& word, int lo, int hi) {
    if (lo > hi) return BinaryTree{};
    int depth = 0;
    int match = -1;
    for (int i = lo; i <= hi; ++i) {
        depth += word[static_cast<size_t>(i)];
        if (depth == 0) {
            match = i;
            break;
        }
    }
    return BinaryTree::node(dyck_to_binary(word, lo + 1, match - 1), dyck_to_binary(word, match + 1, hi));
}

}  // namespace

BinaryTree uniform_binary_tree(int n, Rng& rng) {
    if (n == 0) return BinaryTree{};
    // n up-steps and n+1 down-steps in uniform cyclic order
    std::vector<int> steps(static_cast<size_t>(2 * n + 1), -1);
    for (int i = 0; i < n; ++i) steps[static_cast<size_t>(i)] = 1;
    for (int i = 2 * n; i > 0; --i) std::swap(steps[static_cast<size_t>(i)], steps[static_cast<size_t>(rng.below_int(i + 1))]);
    int r = cycle_lemma_rotation(steps);
    std::vector<int> word(static_cast<size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i)
        word[static_cast<size_t>(i)] = steps[static_cast<size_t>((r + i) % (2 * n + 1))];
    return dyck_to_binary(word, 0, 2 * n - 1);
}

namespace {

PlaneTree tree_from_preorder_degrees(const std::vector<int>& deg) {
    size_t pos = 0;
    std::function<PlaneTree()> build = [&]() -> PlaneTree {
        int d = deg[pos++];
        PlaneTree t;
        t.children.reserve(static_cast<size_t>(d));
        for (int c = 0; c < d; ++c) t.children.push_back(build());
        return t;
    };
    return build();
}

}  // namespace

PlaneTree uniform_plane_tree(int vertices, Rng& rng, long long& tries) {
    if (vertices < 1) throw std::invalid_argument("uniform_plane_tree: need at least one vertex");
    tries = 0;
    std::vector<int> offspring(static_cast<size_t>(vertices));
    for (;;) {
        ++tries;
        long long total = 0;
        for (auto& c : offspring) {
            c = rng.geometric_half();
            total += c;
        }
        if (total != vertices - 1) continue;
        std::vector<int> steps(offspring.size());
        for (size_t i = 0; i < offspring.size(); ++i) steps[i] = offspring[i] - 1;
        int r = cycle_lemma_rotation(steps);
        std::vector<int> deg(offspring.size());
        for (size_t i = 0; i < offspring.size(); ++i)
            deg[i] = offspring[(static_cast<size_t>(r) + i) % offspring.size()];
        return tree_from_preorder_degrees(deg);
    }
}

PlaneTree uniform_plane_tree(int vertices, Rng& rng) {
    long long tries = 0;
    return uniform_plane_tree(vertices, rng, tries);
}

Permutation sample_av231(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_av231: n must be >= 1");
    return binary_to_av231(uniform_binary_tree(n, rng));
}

Permutation sample_av321(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_av321: n must be >= 1");
    return plane_tree_to_av321(uniform_plane_tree(n + 1, rng));
}

std::vector<BinaryTree> enumerate_binary_trees(int n) {
    if (n == 0) return {BinaryTree{}};
    std::vector<BinaryTree> out;
    for (int l = 0; l < n; ++l) {
        auto lefts = enumerate_binary_trees(l);
        auto rights = enumerate_binary_trees(n - 1 - l);
        for (const auto& lt : lefts)
            for (const auto& rt : rights) out.push_back(BinaryTree::node(lt, rt));
    }
    return out;
}

std::vector<PlaneTree> enumerate_plane_trees(int vertices) {
    if (vertices <= 0) return {};
    if (vertices == 1) return {PlaneTree{}};
    std::vector<PlaneTree> out;
    // compositions of vertices-1 into child subtree sizes
    std::function<void(int, std::vector<PlaneTree>&)> rec = [&](int remaining, std::vector<PlaneTree>& acc) {
        if (remaining == 0) {
            out.push_back(PlaneTree{acc});
            return;
        }
        for (int first = 1; first <= remaining; ++first) {
            for (const auto& sub : enumerate_plane_trees(first)) {
                acc.push_back(sub);
                rec(remaining - first, acc);
                acc.pop_back();
            }
        }
    };
    std::vector<PlaneTree> acc;
    rec(vertices - 1, acc);
    return out;
}

int left_spine_length(const BinaryTree& t) {
    int len = 0;
    const BinaryTree* cur = &t;
    while (!cur->empty()) {
        ++len;
        cur = &cur->left();
    }
    return len;
}

int right_spine_length(const BinaryTree& t) {
    int len = 0;
    const BinaryTree* cur = &t;
    while (!cur->empty()) {
        ++len;
        cur = &cur->right();
    }
    return len;
}

}  // namespace permlab
