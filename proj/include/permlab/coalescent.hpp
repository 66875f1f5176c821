#pragma once

#include <vector>

#include "permlab/bipolar.hpp"
#include "permlab/permutation.hpp"

namespace permlab {

// Coalescent-walk process driven by a walk with increments in A: one
// trajectory per start index, following Y above zero and -X below, with the
// overshoot rule gluing crossings to the fresh trajectory.
class CoalescentWalk {
public:
    explicit CoalescentWalk(const Walk2D& driver);

    int size() const { return n_; }

    // Z^{(i)}_t for 1 <= i <= t <= n.
    int value(int i, int t) const { return traj_[static_cast<size_t>(i) - 1][static_cast<size_t>(t - i)]; }

    // #{k in [i,j] : Z^{(i)}_k = 0}; local_time(i,i) = 1.
    int local_time(int i, int j) const;

    // i <=_Z j total order comparison.
    bool order_leq(int i, int j) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> traj_;
};

CoalescentWalk wcp(const Walk2D& driver);

// sigma(i) = rank of i in <=_Z; throws if the driver violates the coalescent
// structure (impossible for walks with increments in A).
Permutation cpbp(const CoalescentWalk& z);

// The Z-planted plane forest of a coalescent-walk process: edges are the
// indices 1..n, the parent of i is the smallest t > i with Z^{(i)}_t = 0.
struct CoalescentForest {
    std::vector<int> parent;             // 1-based; 0 = root edge
    std::vector<std::vector<int>> kids;  // children ordered by <=_Z
    std::vector<int> roots;              // root edges in increasing <=_Z order
    std::vector<int> root_index;         // Z^{(i)}_n per root, aligned with roots
    std::vector<int> exploration;        // edge labels in forest exploration order
};

CoalescentForest fortree(const CoalescentWalk& z);

}  // namespace permlab
