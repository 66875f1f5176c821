#include "permlab/feasible.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace permlab {

OverlapGraph build_overlap_graph(int k) {
    if (k < 2 || k > 5) throw std::invalid_argument("build_overlap_graph: supported range is 2 <= k <= 5");
    OverlapGraph g;
    g.k = k;
    g.vertices = enumerate_class(k - 1, [](const Permutation&) { return true; });
    std::map<Permutation, int> vertex_index;
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) vertex_index[g.vertices[static_cast<size_t>(i)]] = i;

    auto labels = enumerate_class(k, [](const Permutation&) { return true; });
    std::vector<int> head(static_cast<size_t>(k) - 1), tail(static_cast<size_t>(k) - 1);
    std::iota(head.begin(), head.end(), 1);
    std::iota(tail.begin(), tail.end(), 2);
    for (int li = 0; li < static_cast<int>(labels.size()); ++li) {
        const Permutation& pi = labels[static_cast<size_t>(li)];
        int from = vertex_index.at(pattern_at(pi, head));
        int to = vertex_index.at(pattern_at(pi, tail));
        g.edges.push_back({from, to, pi, li});
    }
    return g;
}

std::vector<std::vector<int>> simple_cycles(const OverlapGraph& g, long long ceiling) {
    const int V = static_cast<int>(g.vertices.size());
    std::vector<std::vector<int>> out_edges(static_cast<size_t>(V));
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        out_edges[static_cast<size_t>(g.edges[static_cast<size_t>(e)].from)].push_back(e);

    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<char> blocked(static_cast<size_t>(V), 0);
    long long found = 0;

    // vertex-simple cycles anchored at their smallest vertex
    std::function<void(int, int)> dfs = [&](int root, int v) {
        for (int e : out_edges[static_cast<size_t>(v)]) {
            int w = g.edges[static_cast<size_t>(e)].to;
            if (w == root) {
                path.push_back(e);
                cycles.push_back(path);
                path.pop_back();
                if (++found > ceiling) throw std::runtime_error("simple_cycles: cycle count ceiling exceeded");
            } else if (w > root && !blocked[static_cast<size_t>(w)]) {
                blocked[static_cast<size_t>(w)] = 1;
                path.push_back(e);
                dfs(root, w);
                path.pop_back();
                blocked[static_cast<size_t>(w)] = 0;
            }
        }
    };
    for (int root = 0; root < V; ++root) {
        blocked.assign(static_cast<size_t>(V), 0);
        blocked[static_cast<size_t>(root)] = 1;
        dfs(root, root);
    }
    return cycles;
}

std::vector<rational> cycle_vertex(const OverlapGraph& g, const std::vector<int>& cycle) {
    std::vector<rational> v(g.edges.size(), 0);
    rational weight(1, static_cast<long long>(cycle.size()));
    for (int e : cycle) v[static_cast<size_t>(g.edges[static_cast<size_t>(e)].label_index)] += weight;
    return v;
}

namespace {

// Rank of a set of rational vectors by incremental Gaussian elimination.
class RationalRank {
public:
    explicit RationalRank(size_t dim) : dim_(dim) {}

    bool add(std::vector<rational> row) {
        for (const auto& pivot : rows_) {
            size_t p = pivot.first;
            if (row[p] != 0) {
                rational factor = row[p] / pivot.second[p];
                for (size_t j = 0; j < dim_; ++j) row[j] -= factor * pivot.second[j];
            }
        }
        for (size_t j = 0; j < dim_; ++j)
            if (row[j] != 0) {
                rows_.push_back({j, std::move(row)});
                return true;
            }
        return false;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    size_t dim_;
    std::vector<std::pair<size_t, std::vector<rational>>> rows_;
};

}  // namespace

int polytope_dimension(int k) {
    OverlapGraph g = build_overlap_graph(k);
    auto cycles = simple_cycles(g);
    if (cycles.empty()) return -1;
    std::vector<rational> base = cycle_vertex(g, cycles.front());
    RationalRank rank(g.edges.size());
    for (size_t c = 1; c < cycles.size(); ++c) {
        std::vector<rational> diff = cycle_vertex(g, cycles[c]);
        for (size_t j = 0; j < diff.size(); ++j) diff[j] -= base[j];
        rank.add(std::move(diff));
    }
    return rank.rank();
}

namespace {

// Phase-1 simplex with Bland's rule deciding feasibility of
//   A x = b, x >= 0
// in exact rational arithmetic.
bool lp_feasible(std::vector<std::vector<rational>> A, std::vector<rational> b) {
    const size_t m = A.size();
    const size_t n = m == 0 ? 0 : A[0].size();
    for (size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            for (auto& a : A[i]) a = -a;
            b[i] = -b[i];
        }
    // tableau with artificial basis
    std::vector<std::vector<rational>> T(m, std::vector<rational>(n + m + 1, 0));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][n + m] = b[i];
    }
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;
    // objective: minimize sum of artificials; reduced cost row
    std::vector<rational> cost(n + m + 1, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= n + m; ++j) cost[j] += T[i][j];

    for (;;) {
        size_t enter = n + m;
        for (size_t j = 0; j < n; ++j)  // Bland: smallest eligible index
            if (cost[j] > 0) {
                enter = j;
                break;
            }
        if (enter == n + m) break;
        size_t leave = m;
        rational best;
        for (size_t i = 0; i < m; ++i)
            if (T[i][enter] > 0) {
                rational ratio = T[i][n + m] / T[i][enter];
                if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
        if (leave == m) break;  // unbounded direction cannot happen in phase 1
        rational pivot = T[leave][enter];
        for (auto& v : T[leave]) v /= pivot;
        for (size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            rational f = T[i][enter];
            for (size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
        }
        rational fc = cost[enter];
        for (size_t j = 0; j <= n + m; ++j) cost[j] -= fc * T[leave][j];
        basis[leave] = enter;
    }
    rational objective = 0;
    for (size_t i = 0; i < m; ++i)
        if (basis[i] >= n) objective += T[i][n + m];
    return objective == 0;
}

}  // namespace

bool membership(const std::vector<rational>& v, int k, const rational& eps) {
    OverlapGraph g = build_overlap_graph(k);
    auto cycles = simple_cycles(g);
    const size_t E = g.edges.size();
    if (v.size() != E) throw std::invalid_argument("membership: wrong vector dimension");
    const size_t N = cycles.size();
    std::vector<std::vector<rational>> verts;
    verts.reserve(N);
    for (const auto& c : cycles) verts.push_back(cycle_vertex(g, c));

    // variables: lambda_C (N), slack s_e, surplus t_e (E each)
    // sum_C lambda_C vert_C[e] + s_e = v_e + eps
    // sum_C lambda_C vert_C[e] - t_e = v_e - eps
    // sum_C lambda_C = 1
    const size_t ncols = N + 2 * E;
    std::vector<std::vector<rational>> A;
    std::vector<rational> b;
    for (size_t e = 0; e < E; ++e) {
        std::vector<rational> row(ncols, 0);
        for (size_t c = 0; c < N; ++c) row[c] = verts[c][e];
        row[N + e] = 1;
        A.push_back(std::move(row));
        b.push_back(v[e] + eps);
    }
    for (size_t e = 0; e < E; ++e) {
        std::vector<rational> row(ncols, 0);
        for (size_t c = 0; c < N; ++c) row[c] = verts[c][e];
        row[N + E + e] = -1;
        A.push_back(std::move(row));
        b.push_back(v[e] - eps);
    }
    {
        std::vector<rational> row(ncols, 0);
        for (size_t c = 0; c < N; ++c) row[c] = 1;
        A.push_back(std::move(row));
        b.push_back(1);
    }
    return lp_feasible(std::move(A), std::move(b));
}

std::vector<rational> cocc_vector(const Permutation& sigma, int k, CoccNorm norm) {
    const int n = sigma.size();
    if (n < k) throw std::invalid_argument("cocc_vector: |sigma| < k");
    auto patterns = enumerate_class(k, [](const Permutation&) { return true; });
    std::vector<rational> v;
    v.reserve(patterns.size());
    long long denom = norm == CoccNorm::OverN ? n : n - k + 1;
    for (const auto& pi : patterns)
        v.push_back(rational(static_cast<long long>(count_consecutive(pi, sigma)), denom));
    return v;
}

std::string polytope_csv(const OverlapGraph& g, const std::vector<std::vector<int>>& cycles) {
    std::ostringstream out;
    out << "cycle";
    for (const auto& e : g.edges) {
        std::string lbl = e.label.to_string();
        std::replace(lbl.begin(), lbl.end(), ' ', '-');
        out << ',' << lbl << "_num," << lbl << "_den";
    }
    out << '\n';
    for (size_t c = 0; c < cycles.size(); ++c) {
        out << c;
        auto v = cycle_vertex(g, cycles[c]);
        for (const auto& x : v)
            out << ',' << boost::multiprecision::numerator(x) << ',' << boost::multiprecision::denominator(x);
        out << '\n';
    }
    return out.str();
}

}  // namespace permlab
