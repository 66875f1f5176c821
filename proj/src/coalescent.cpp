#include "permlab/coalescent.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace permlab {

CoalescentWalk::CoalescentWalk(const Walk2D& driver) : n_(driver.size()) {
    if (!driver.increments_admissible())
        throw std::invalid_argument("coalescent walk: driver increments not in A");
    traj_.resize(static_cast<size_t>(n_));
    for (int s = 1; s <= n_; ++s) {
        auto& z = traj_[static_cast<size_t>(s) - 1];
        z.resize(static_cast<size_t>(n_ - s + 1));
        z[0] = 0;
        for (int t = s; t < n_; ++t) {
            int dx = driver.points[static_cast<size_t>(t)].first - driver.points[static_cast<size_t>(t) - 1].first;
            int dy = driver.points[static_cast<size_t>(t)].second - driver.points[static_cast<size_t>(t) - 1].second;
            int cur = z[static_cast<size_t>(t - s)];
            int nxt;
            if (dx == 1 && dy == -1) {
                nxt = cur - 1;
            } else {
                int i = -dx, j = dy;
                if (cur >= 0)
                    nxt = cur + j;
                else if (cur < -i)
                    nxt = cur + i;
                else
                    nxt = j;  // crossing: coalesce with the fresh trajectory
            }
            z[static_cast<size_t>(t - s + 1)] = nxt;
        }
    }
}

CoalescentWalk wcp(const Walk2D& driver) { return CoalescentWalk(driver); }

int CoalescentWalk::local_time(int i, int j) const {
    int count = 0;
    for (int t = i; t <= j; ++t)
        if (value(i, t) == 0) ++count;
    return count;
}

bool CoalescentWalk::order_leq(int i, int j) const {
    if (i == j) return true;
    if (i < j) return value(i, j) < 0;
    return value(j, i) >= 0;
}

Permutation cpbp(const CoalescentWalk& z) {
    const int n = z.size();
    std::vector<int> vals(static_cast<size_t>(n), 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j != i && z.order_leq(j, i)) ++vals[static_cast<size_t>(i) - 1];
    // the Permutation constructor rejects any antisymmetry violation
    return Permutation(std::move(vals));
}

CoalescentForest fortree(const CoalescentWalk& z) {
    const int n = z.size();
    CoalescentForest f;
    f.parent.assign(static_cast<size_t>(n) + 1, 0);
    f.kids.assign(static_cast<size_t>(n) + 1, {});
    for (int i = 1; i <= n; ++i) {
        for (int t = i + 1; t <= n; ++t)
            if (z.value(i, t) == 0) {
                f.parent[static_cast<size_t>(i)] = t;
                break;
            }
    }
    auto leq = [&z](int a, int b) { return z.order_leq(a, b); };
    for (int i = 1; i <= n; ++i)
        if (f.parent[static_cast<size_t>(i)] != 0)
            f.kids[static_cast<size_t>(f.parent[static_cast<size_t>(i)])].push_back(i);
    for (int v = 1; v <= n; ++v) std::sort(f.kids[static_cast<size_t>(v)].begin(), f.kids[static_cast<size_t>(v)].end(), leq);
    for (int i = 1; i <= n; ++i)
        if (f.parent[static_cast<size_t>(i)] == 0) f.roots.push_back(i);
    std::sort(f.roots.begin(), f.roots.end(), leq);
    for (int r : f.roots) f.root_index.push_back(z.value(r, n));

    // a parent precedes its children in <=_Z (the child's trajectory sits at
    // zero when the parent's starts), so the exploration is a preorder
    std::function<void(int)> explore = [&](int edge) {
        f.exploration.push_back(edge);
        for (int c : f.kids[static_cast<size_t>(edge)]) explore(c);
    };
    for (int r : f.roots) explore(r);
    return f;
}

}  // namespace permlab
