#include "permlab/permuton.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace permlab {

using rational = boost::multiprecision::cpp_rational;

GridPermuton::GridPermuton(int n, std::vector<GridCell> cells) : n_(n), cells_(std::move(cells)) {
    if (n_ < 1) throw std::invalid_argument("GridPermuton: resolution must be positive");
    validate();
    std::sort(cells_.begin(), cells_.end(),
              [](const GridCell& a, const GridCell& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
}

void GridPermuton::validate() const {
    std::vector<rational> row_sum(static_cast<size_t>(n_)), col_sum(static_cast<size_t>(n_));
    for (const auto& c : cells_) {
        if (c.row < 1 || c.row > n_ || c.col < 1 || c.col > n_)
            throw std::invalid_argument("GridPermuton: cell index out of range");
        if (c.mass.den <= 0 || c.mass.num < 0) throw std::invalid_argument("GridPermuton: bad mass");
        rational m(c.mass.num, c.mass.den);
        row_sum[static_cast<size_t>(c.row - 1)] += m;
        col_sum[static_cast<size_t>(c.col - 1)] += m;
    }
    const rational target(1, n_);
    for (int i = 0; i < n_; ++i) {
        if (row_sum[static_cast<size_t>(i)] != target || col_sum[static_cast<size_t>(i)] != target)
            throw std::invalid_argument("GridPermuton: marginals are not uniform");
    }
}

double GridPermuton::rect_mass(double a, double b, double c, double d) const {
    if (!(a < b) || !(c < d)) throw std::invalid_argument("rect_mass: degenerate rectangle");
    double total = 0.0;
    const double w = 1.0 / n_;
    for (const auto& cell : cells_) {
        double x0 = (cell.row - 1) * w, x1 = cell.row * w;
        double y0 = (cell.col - 1) * w, y1 = cell.col * w;
        double ox = std::max(0.0, std::min(b, x1) - std::max(a, x0));
        double oy = std::max(0.0, std::min(d, y1) - std::max(c, y0));
        if (ox > 0 && oy > 0) total += cell.mass.to_double() * (ox / w) * (oy / w);
    }
    return total;
}

std::string GridPermuton::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    auto& arr = j["cells"] = nlohmann::json::array();
    for (const auto& c : cells_) arr.push_back({c.row, c.col, c.mass.num, c.mass.den});
    return j.dump();
}

GridPermuton GridPermuton::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<GridCell> cells;
    for (const auto& e : j.at("cells"))
        cells.push_back({e.at(0).get<int>(), e.at(1).get<int>(), {e.at(2).get<long long>(), e.at(3).get<long long>()}});
    return GridPermuton(j.at("n").get<int>(), std::move(cells));
}

GridPermuton permuton_of(const Permutation& sigma) {
    if (sigma.size() < 1) throw std::invalid_argument("permuton_of: empty permutation");
    std::vector<GridCell> cells;
    cells.reserve(static_cast<size_t>(sigma.size()));
    for (int i = 1; i <= sigma.size(); ++i) cells.push_back({i, sigma(i), {1, sigma.size()}});
    return GridPermuton(sigma.size(), std::move(cells));
}

RectanglePermuton::RectanglePermuton(double z) : z_(z) {
    if (!(z > 0.0) || !(z < 1.0)) throw std::invalid_argument("RectanglePermuton: z must lie in (0,1)");
}

namespace {

struct Segment {
    double x0, y0, x1, y1;  // x0 < x1, slope +-1
};

std::array<Segment, 4> rectangle_segments(double z) {
    return {{
        {0.0, z, z, 0.0},              // L1, slope -1
        {0.0, z, 1.0 - z, 1.0},        // L2, slope +1
        {z, 0.0, 1.0, 1.0 - z},        // L3, slope +1
        {1.0 - z, 1.0, 1.0, 1.0 - z},  // L4, slope -1
    }};
}

// Length of the x-projection of the part of s inside [a,b] x [c,d].
double clipped_projection(const Segment& s, double a, double b, double c, double d) {
    double lo = std::max(s.x0, a), hi = std::min(s.x1, b);
    double slope = (s.y1 - s.y0) / (s.x1 - s.x0);  // +-1
    if (slope > 0) {
        lo = std::max(lo, s.x0 + (c - s.y0));
        hi = std::min(hi, s.x0 + (d - s.y0));
    } else {
        lo = std::max(lo, s.x0 + (s.y0 - d));
        hi = std::min(hi, s.x0 + (s.y0 - c));
    }
    return std::max(0.0, hi - lo);
}

}  // namespace

double RectanglePermuton::rect_mass(double a, double b, double c, double d) const {
    if (!(a < b) || !(c < d)) throw std::invalid_argument("rect_mass: degenerate rectangle");
    double total = 0.0;
    for (const auto& s : rectangle_segments(z_)) total += 0.5 * clipped_projection(s, a, b, c, d);
    return total;
}

namespace {

// Dense table over the candidate lines. Entry (y, x) of `prefix` holds
// D([0, xs[x]] x [0, ys[y]]) after `finalize`.
class PrefixTable {
public:
    PrefixTable(std::vector<double> xs, std::vector<double> ys)
        : xs_(std::move(xs)), ys_(std::move(ys)), M_(static_cast<int>(xs_.size())), N_(static_cast<int>(ys_.size())),
          data_(static_cast<size_t>(M_) * static_cast<size_t>(N_), 0.0) {}

    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    int M() const { return M_; }
    int N() const { return N_; }

    // adds mass into the candidate cell whose lower-left line indices are (xi, yi)
    void deposit(int xi, int yi, double mass) {
        data_[(static_cast<size_t>(yi) + 1) * static_cast<size_t>(M_) + static_cast<size_t>(xi) + 1] += mass;
    }

    int locate_x(double v) const { return locate(xs_, v); }
    int locate_y(double v) const { return locate(ys_, v); }

    void finalize() {
        for (int y = 1; y < N_; ++y) {
            double* row = &data_[static_cast<size_t>(y) * static_cast<size_t>(M_)];
            const double* prev = &data_[static_cast<size_t>(y - 1) * static_cast<size_t>(M_)];
            double acc = 0.0;
            for (int x = 0; x < M_; ++x) {
                acc += row[x];
                row[x] = acc + prev[x];
            }
        }
    }

    const double* row(int y) const { return &data_[static_cast<size_t>(y) * static_cast<size_t>(M_)]; }

private:
    static int locate(const std::vector<double>& lines, double v) {
        // index of the candidate cell containing v: largest i with lines[i] <= v
        auto it = std::upper_bound(lines.begin(), lines.end(), v + 1e-13);
        int i = static_cast<int>(it - lines.begin()) - 1;
        return std::clamp(i, 0, static_cast<int>(lines.size()) - 2);
    }

    std::vector<double> xs_, ys_;
    int M_, N_;
    std::vector<double> data_;
};

void deposit_grid(PrefixTable& table, const GridPermuton& g, double sign) {
    const int n = g.resolution();
    const auto& xs = table.xs();
    const auto& ys = table.ys();
    for (const auto& cell : g.cells()) {
        double m = sign * cell.mass.to_double();
        double x0 = static_cast<double>(cell.row - 1) / n, x1 = static_cast<double>(cell.row) / n;
        double y0 = static_cast<double>(cell.col - 1) / n, y1 = static_cast<double>(cell.col) / n;
        int ix0 = table.locate_x(x0 + 1e-13), ix1 = table.locate_x(x1 - 1e-13);
        int iy0 = table.locate_y(y0 + 1e-13), iy1 = table.locate_y(y1 - 1e-13);
        for (int yi = iy0; yi <= iy1; ++yi) {
            double oy = std::min(y1, ys[static_cast<size_t>(yi + 1)]) - std::max(y0, ys[static_cast<size_t>(yi)]);
            if (oy <= 0) continue;
            double fy = oy * n;
            for (int xi = ix0; xi <= ix1; ++xi) {
                double ox = std::min(x1, xs[static_cast<size_t>(xi + 1)]) - std::max(x0, xs[static_cast<size_t>(xi)]);
                if (ox <= 0) continue;
                table.deposit(xi, yi, m * (ox * n) * fy);
            }
        }
    }
}

void deposit_rectangle(PrefixTable& table, const RectanglePermuton& r, double sign) {
    const auto& xs = table.xs();
    const auto& ys = table.ys();
    for (const auto& s : rectangle_segments(r.z())) {
        double slope = (s.y1 - s.y0) / (s.x1 - s.x0);
        // cut the segment at every candidate line crossing (x and y)
        std::vector<double> cuts = {s.x0, s.x1};
        for (double x : xs)
            if (x > s.x0 && x < s.x1) cuts.push_back(x);
        for (double y : ys) {
            double x = s.x0 + (y - s.y0) / slope;
            if (x > s.x0 && x < s.x1) cuts.push_back(x);
        }
        std::sort(cuts.begin(), cuts.end());
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            double a = cuts[i], b = cuts[i + 1];
            if (b - a < 1e-15) continue;
            double xm = 0.5 * (a + b);
            double ym = s.y0 + slope * (xm - s.x0);
            table.deposit(table.locate_x(xm), table.locate_y(ym), sign * 0.5 * (b - a));
        }
    }
}

// Exact supremum of |D(R)| over rectangles with corners on the candidate
// lines. The search pairs dyadic blocks of y-lines; a block pair is bounded
// rigorously through per-block min/max envelopes of the prefix rows,
//   range(H_d - H_c) <= max_x(envmax_B2 - envmin_B1) + max_x(envmax_B1 - envmin_B2),
// and best-first refinement visits only near-optimal pairs.
double sup_over_candidates(const PrefixTable& table) {
    const int M = table.M(), N = table.N();

    // envelope pyramid: level j groups rows into blocks of size 2^j
    struct Level {
        int block = 1;
        std::vector<double> mn, mx;  // [block][x]
    };
    std::vector<Level> pyr;
    {
        Level leaf;
        leaf.block = 1;
        leaf.mn.resize(static_cast<size_t>(N) * static_cast<size_t>(M));
        for (int y = 0; y < N; ++y)
            std::copy(table.row(y), table.row(y) + M, leaf.mn.begin() + static_cast<size_t>(y) * M);
        leaf.mx = leaf.mn;
        pyr.push_back(std::move(leaf));
        while (pyr.back().block < N) {
            const Level& prev = pyr.back();
            Level next;
            next.block = prev.block * 2;
            int nblocks = (N + next.block - 1) / next.block;
            next.mn.assign(static_cast<size_t>(nblocks) * static_cast<size_t>(M), 0.0);
            next.mx = next.mn;
            int prev_blocks = (N + prev.block - 1) / prev.block;
            for (int b = 0; b < nblocks; ++b) {
                int left = 2 * b, right = std::min(2 * b + 1, prev_blocks - 1);
                for (int x = 0; x < M; ++x) {
                    size_t o = static_cast<size_t>(b) * M + static_cast<size_t>(x);
                    size_t l = static_cast<size_t>(left) * M + static_cast<size_t>(x);
                    size_t r = static_cast<size_t>(right) * M + static_cast<size_t>(x);
                    next.mn[o] = std::min(prev.mn[l], prev.mn[r]);
                    next.mx[o] = std::max(prev.mx[l], prev.mx[r]);
                }
            }
            pyr.push_back(std::move(next));
        }
    }

    auto range_of_pair = [&](int c, int d) {
        const double* hc = table.row(c);
        const double* hd = table.row(d);
        double mx = 0.0, mn = 0.0;
        for (int x = 0; x < M; ++x) {
            double v = hd[x] - hc[x];
            mx = std::max(mx, v);
            mn = std::min(mn, v);
        }
        return mx - mn;
    };
    // upper bound over all (c in block b1 at level l1, d in block b2 at l2)
    auto pair_bound = [&](int l1, int b1, int l2, int b2) {
        const Level& L1 = pyr[static_cast<size_t>(l1)];
        const Level& L2 = pyr[static_cast<size_t>(l2)];
        const double* mn1 = &L1.mn[static_cast<size_t>(b1) * M];
        const double* mx1 = &L1.mx[static_cast<size_t>(b1) * M];
        const double* mn2 = &L2.mn[static_cast<size_t>(b2) * M];
        const double* mx2 = &L2.mx[static_cast<size_t>(b2) * M];
        double up = 0.0, dn = 0.0;
        for (int x = 0; x < M; ++x) {
            up = std::max(up, mx2[x] - mn1[x]);
            dn = std::max(dn, mx1[x] - mn2[x]);
        }
        return up + dn;
    };

    struct Node {
        double bound;
        int l1, b1, l2, b2;
        bool operator<(const Node& o) const { return bound < o.bound; }
    };
    double best = 0.0;
    std::priority_queue<Node> heap;
    auto push_node = [&](int l1, int b1, int l2, int b2) {
        int c_lo = b1 << l1;
        int d_hi = std::min(N - 1, ((b2 + 1) << l2) - 1);
        if (c_lo >= N || (b2 << l2) >= N) return;
        if (c_lo >= d_hi) return;  // no pair c < d inside
        if (l1 == 0 && l2 == 0) {
            if (b1 < b2) best = std::max(best, range_of_pair(b1, b2));
            return;
        }
        double bound = pair_bound(l1, b1, l2, b2);
        if (bound > best + 1e-15) heap.push({bound, l1, b1, l2, b2});
    };
    int top = static_cast<int>(pyr.size()) - 1;
    push_node(top, 0, top, 0);
    while (!heap.empty()) {
        Node node = heap.top();
        heap.pop();
        if (node.bound <= best + 1e-15) break;
        if (node.l1 >= node.l2) {
            push_node(node.l1 - 1, 2 * node.b1, node.l2, node.b2);
            push_node(node.l1 - 1, 2 * node.b1 + 1, node.l2, node.b2);
        } else {
            push_node(node.l1, node.b1, node.l2 - 1, 2 * node.b2);
            push_node(node.l1, node.b1, node.l2 - 1, 2 * node.b2 + 1);
        }
    }
    return best;
}

std::vector<double> merged_lines(int n1, int n2, const std::vector<double>& extra) {
    std::vector<double> v;
    for (int i = 0; i <= n1; ++i) v.push_back(static_cast<double>(i) / n1);
    for (int j = 0; j <= n2; ++j) v.push_back(static_cast<double>(j) / n2);
    for (double e : extra)
        if (e > 0.0 && e < 1.0) v.push_back(e);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(), [](double a, double b) { return std::abs(a - b) < 1e-13; }), v.end());
    return v;
}

}  // namespace

double d_square(const GridPermuton& a, const GridPermuton& b) {
    std::vector<double> lines = merged_lines(a.resolution(), b.resolution(), {});
    PrefixTable table(lines, lines);
    deposit_grid(table, a, 1.0);
    deposit_grid(table, b, -1.0);
    table.finalize();
    return sup_over_candidates(table);
}

double d_square(const GridPermuton& a, const RectanglePermuton& b) {
    double z = b.z();
    std::vector<double> lines = merged_lines(a.resolution(), 1, {z, 1.0 - z});
    PrefixTable table(lines, lines);
    deposit_grid(table, a, 1.0);
    deposit_rectangle(table, b, -1.0);
    table.finalize();
    return sup_over_candidates(table);
}

Permutation sample_induced(const GridPermuton& mu, int k, Rng& rng) {
    if (k < 1) throw std::invalid_argument("sample_induced: k must be >= 1");
    const auto& cells = mu.cells();
    std::vector<double> cdf(cells.size());
    double acc = 0.0;
    for (size_t i = 0; i < cells.size(); ++i) {
        acc += cells[i].mass.to_double();
        cdf[i] = acc;
    }
    const double w = 1.0 / mu.resolution();
    std::vector<std::pair<double, double>> pts(static_cast<size_t>(k));
    for (auto& p : pts) {
        double u = rng.uniform() * acc;
        size_t idx = static_cast<size_t>(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (idx >= cells.size()) idx = cells.size() - 1;
        p.first = (cells[idx].row - 1 + rng.uniform()) * w;
        p.second = (cells[idx].col - 1 + rng.uniform()) * w;
    }
    std::sort(pts.begin(), pts.end());
    std::vector<double> ys(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) ys[static_cast<size_t>(i)] = pts[static_cast<size_t>(i)].second;
    return standardize(ys);
}

Permutation sample_induced(const RectanglePermuton& mu, int k, Rng& rng) {
    if (k < 1) throw std::invalid_argument("sample_induced: k must be >= 1");
    auto segs = rectangle_segments(mu.z());
    std::array<double, 4> mass{};
    for (size_t i = 0; i < 4; ++i) mass[i] = 0.5 * (segs[i].x1 - segs[i].x0);
    std::vector<std::pair<double, double>> pts(static_cast<size_t>(k));
    for (auto& p : pts) {
        double u = rng.uniform();
        size_t idx = 0;
        while (idx < 3 && u > mass[idx]) {
            u -= mass[idx];
            ++idx;
        }
        const auto& s = segs[idx];
        double t = rng.uniform();
        p.first = s.x0 + t * (s.x1 - s.x0);
        p.second = s.y0 + t * (s.y1 - s.y0);
    }
    std::sort(pts.begin(), pts.end());
    std::vector<double> ys(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) ys[static_cast<size_t>(i)] = pts[static_cast<size_t>(i)].second;
    return standardize(ys);
}

}  // namespace permlab
