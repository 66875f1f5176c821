#include "permlab/skew.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace permlab {

namespace {

// Exact backward DP for a correlated +-1 lattice walk conditioned to a
// quadrant excursion: steps (+1,+1),(−1,−1) with weight (1+rho)/4 and
// (+1,−1),(−1,+1) with weight (1-rho)/4, confined to [0,B]^2.
class LatticeExcursionDp {
public:
    LatticeExcursionDp(int n, double rho)
        : n_(n), B_(8 * static_cast<int>(std::sqrt(n + 1.0)) + 8), W_(B_ + 1),
          wa_((1.0 + rho) / 4.0), wb_((1.0 - rho) / 4.0) {
        if (n_ % 2 != 0) throw std::invalid_argument("lattice excursion: n must be even");
        stride_ = n_ <= 512 ? 1 : std::max(1, static_cast<int>(std::sqrt(n_ + 1.0)));
        layers_.assign(static_cast<size_t>(n_) + 1, {});
        std::vector<double> cur(static_cast<size_t>(W_) * static_cast<size_t>(W_), 0.0);
        cur[0] = 1.0;
        store(n_, cur);
        for (int t = n_ - 1; t >= 0; --t) {
            std::vector<double> nxt = step_back(cur);
            cur.swap(nxt);
            store(t, cur);
        }
        if (cur[0] <= 0.0) throw std::logic_error("lattice excursion: no mass at the start");
    }

    std::pair<std::vector<double>, std::vector<double>> sample(Rng& rng) const {
        std::lock_guard<std::mutex> lock(cache_mu_);
        std::vector<double> dx(static_cast<size_t>(n_)), dy(static_cast<size_t>(n_));
        int x = 0, y = 0;
        for (int t = 0; t < n_; ++t) {
            const std::vector<double>& nxt = layer(t + 1);
            double w[4];
            static const int sx[4] = {1, -1, 1, -1};
            static const int sy[4] = {1, -1, -1, 1};
            double total = 0.0;
            for (int c = 0; c < 4; ++c) {
                int xx = x + sx[c], yy = y + sy[c];
                double wt = (c < 2) ? wa_ : wb_;
                w[c] = (xx >= 0 && yy >= 0 && xx <= B_ && yy <= B_) ? wt * nxt[idx(xx, yy)] : 0.0;
                total += w[c];
            }
            double u = rng.uniform() * total;
            int pick = 3;
            for (int c = 0; c < 4; ++c) {
                if (u < w[c]) {
                    pick = c;
                    break;
                }
                u -= w[c];
            }
            x += sx[pick];
            y += sy[pick];
            dx[static_cast<size_t>(t)] = sx[pick];
            dy[static_cast<size_t>(t)] = sy[pick];
        }
        if (x != 0 || y != 0) throw std::logic_error("lattice excursion: endpoint missed");
        return {std::move(dx), std::move(dy)};
    }

private:
    size_t idx(int x, int y) const { return static_cast<size_t>(x) * static_cast<size_t>(W_) + static_cast<size_t>(y); }

    std::vector<double> step_back(const std::vector<double>& cur) const {
        std::vector<double> nxt(static_cast<size_t>(W_) * static_cast<size_t>(W_), 0.0);
        double mx = 0.0;
        for (int x = 0; x <= B_; ++x)
            for (int y = 0; y <= B_; ++y) {
                double v = 0.0;
                if (x + 1 <= B_ && y + 1 <= B_) v += wa_ * cur[idx(x + 1, y + 1)];
                if (x >= 1 && y >= 1) v += wa_ * cur[idx(x - 1, y - 1)];
                if (x + 1 <= B_ && y >= 1) v += wb_ * cur[idx(x + 1, y - 1)];
                if (x >= 1 && y + 1 <= B_) v += wb_ * cur[idx(x - 1, y + 1)];
                nxt[idx(x, y)] = v;
                mx = std::max(mx, v);
            }
        if (mx <= 0.0) throw std::logic_error("lattice excursion: dead layer");
        for (auto& v : nxt) v /= mx;
        return nxt;
    }

    void store(int t, const std::vector<double>& layer_data) {
        if (t % stride_ == 0 || t == n_) layers_[static_cast<size_t>(t)] = layer_data;
    }

    const std::vector<double>& layer(int t) const {
        if (!layers_[static_cast<size_t>(t)].empty()) return layers_[static_cast<size_t>(t)];
        int anchor = t;
        while (layers_[static_cast<size_t>(anchor)].empty()) ++anchor;
        std::vector<double> cur = layers_[static_cast<size_t>(anchor)];
        for (int tt = anchor - 1; tt >= t; --tt) {
            cur = step_back(cur);
            layers_[static_cast<size_t>(tt)] = cur;
            recomputed_.push_back(tt);
        }
        trim_cache();
        return layers_[static_cast<size_t>(t)];
    }

    void trim_cache() const {
        while (recomputed_.size() > 2 * static_cast<size_t>(stride_)) {
            int victim = recomputed_.front();
            recomputed_.erase(recomputed_.begin());
            if (victim % stride_ != 0) layers_[static_cast<size_t>(victim)].clear();
        }
    }

    int n_, B_, W_;
    int stride_;
    double wa_, wb_;
    mutable std::mutex cache_mu_;
    mutable std::vector<std::vector<double>> layers_;
    mutable std::vector<int> recomputed_;
};

// one lattice DP per (size, correlation)
const LatticeExcursionDp& cached_lattice_dp(int n, double rho) {
    static std::mutex mu;
    static std::map<std::pair<int, long long>, std::unique_ptr<LatticeExcursionDp>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, static_cast<long long>(std::llround(rho * 1e9)));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<LatticeExcursionDp>(n, rho)).first;
    return *it->second;
}

std::pair<std::vector<double>, std::vector<double>> gaussian_excursion(int n, double rho, int cap, Rng& rng) {
    const double s = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    for (int attempt = 0; attempt < cap; ++attempt) {
        std::vector<double> dx(static_cast<size_t>(n)), dy(static_cast<size_t>(n));
        double sx = 0.0, sy = 0.0;
        for (int t = 0; t < n; ++t) {
            double g1 = rng.gaussian(), g2 = rng.gaussian();
            if (!std::isfinite(g1) || !std::isfinite(g2)) throw std::runtime_error("skew: non-finite increment");
            dx[static_cast<size_t>(t)] = g1;
            dy[static_cast<size_t>(t)] = rho * g1 + s * g2;
            sx += g1;
            sy += dy[static_cast<size_t>(t)];
        }
        // bridge by linear recentering, then demand non-negative partial sums
        for (int t = 0; t < n; ++t) {
            dx[static_cast<size_t>(t)] -= sx / n;
            dy[static_cast<size_t>(t)] -= sy / n;
        }
        double x = 0.0, y = 0.0;
        bool ok = true;
        for (int t = 0; t < n && ok; ++t) {
            x += dx[static_cast<size_t>(t)];
            y += dy[static_cast<size_t>(t)];
            if (x < 0.0 || y < 0.0) ok = false;
        }
        if (ok) return {std::move(dx), std::move(dy)};
    }
    throw std::runtime_error("skew: gaussian excursion rejection cap exceeded");
}

}  // namespace

namespace {

// One flow step: sign changes across zero and departures from zero restart
// with the overshoot magnitude and the supplied coin. Integer drivers walk
// straight through the origin, so the zero-departure case carries the
// excursion-sign randomization there.
double skew_step(double prev, double dxt, double dyt, double sign) {
    double raw = prev > 0.0 ? prev + dyt : prev - dxt;
    bool jump_cross = (prev > 0.0 && raw < 0.0) || (prev < 0.0 && raw > 0.0);
    bool zero_departure = prev == 0.0 && raw != 0.0;
    if (jump_cross || zero_departure) return sign * std::abs(raw);
    return raw;
}

}  // namespace

double SkewFlow::advance(double prev, int t) const {
    return skew_step(prev, dx[static_cast<size_t>(t) - 1], dy[static_cast<size_t>(t) - 1],
                     cross_sign[static_cast<size_t>(t) - 1]);
}

double SkewFlow::trajectory_value(int start, int t) const {
    double z = 0.0;
    for (int s = start + 1; s <= t; ++s) z = advance(z, s);
    return z;
}

SkewFlow sample_skew_flow(const SkewDriveConfig& cfg, Rng& rng) {
    if (cfg.n < 64) throw std::invalid_argument("skew: n must be >= 64");
    if (cfg.q < 0.0 || cfg.q > 1.0 || cfg.rho < -1.0 || cfg.rho > 1.0)
        throw std::invalid_argument("skew: parameters out of range");
    SkewFlow flow;
    bool use_lattice = cfg.driver == SkewDriveConfig::Driver::LatticeDp ||
                       (cfg.driver == SkewDriveConfig::Driver::Auto && cfg.n > 128);
    if (use_lattice) {
        int n = cfg.n - (cfg.n % 2);
        auto [dx, dy] = cached_lattice_dp(n, cfg.rho).sample(rng);
        flow.dx = std::move(dx);
        flow.dy = std::move(dy);
    } else {
        auto [dx, dy] = gaussian_excursion(cfg.n, cfg.rho, cfg.rejection_cap, rng);
        flow.dx = std::move(dx);
        flow.dy = std::move(dy);
    }
    flow.cross_sign.resize(flow.dx.size());
    for (auto& c : flow.cross_sign) c = rng.bernoulli(cfg.q) ? 1.0 : -1.0;
    return flow;
}

SkewFlow skew_flow_from_walk(const Walk2D& walk, double q, Rng& rng) {
    SkewFlow flow;
    const int n = walk.size();
    flow.dx.resize(static_cast<size_t>(n) - 1);
    flow.dy.resize(static_cast<size_t>(n) - 1);
    for (int t = 1; t < n; ++t) {
        flow.dx[static_cast<size_t>(t) - 1] =
            walk.points[static_cast<size_t>(t)].first - walk.points[static_cast<size_t>(t) - 1].first;
        flow.dy[static_cast<size_t>(t) - 1] =
            walk.points[static_cast<size_t>(t)].second - walk.points[static_cast<size_t>(t) - 1].second;
    }
    flow.cross_sign.resize(flow.dx.size());
    for (auto& c : flow.cross_sign) c = rng.bernoulli(q) ? 1.0 : -1.0;
    return flow;
}

Permutation skew_flow_permutation(const SkewFlow& flow, int m) {
    const int n = flow.steps();
    if (m < 2 || m > n) throw std::invalid_argument("skew_flow_permutation: bad grid");
    std::vector<int> grid(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) grid[static_cast<size_t>(i)] = static_cast<int>((static_cast<long long>(i) * n) / m);

    // trajectories from each grid start, evaluated at all later grid times
    std::vector<std::vector<double>> vals(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto& row = vals[static_cast<size_t>(i)];
        row.assign(static_cast<size_t>(m - i), 0.0);
        double z = 0.0;
        int gi = i;
        for (int t = grid[static_cast<size_t>(i)] + 1; t <= grid[static_cast<size_t>(m - 1)]; ++t) {
            z = flow.advance(z, t);
            while (gi + 1 < m && grid[static_cast<size_t>(gi) + 1] == t) {
                ++gi;
                row[static_cast<size_t>(gi - i)] = z;
            }
        }
    }

    std::vector<int> ranks(static_cast<size_t>(m), 1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            bool j_leq_i;
            if (j < i)
                j_leq_i = vals[static_cast<size_t>(j)][static_cast<size_t>(i - j)] < 0.0;
            else
                j_leq_i = vals[static_cast<size_t>(i)][static_cast<size_t>(j - i)] >= 0.0;
            if (j_leq_i) ++ranks[static_cast<size_t>(i)];
        }
    // rank ties can appear when simultaneous +-crossings reorder nearby
    // trajectories; break them by start time
    std::vector<int> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&ranks](int a, int b) {
        return std::tie(ranks[static_cast<size_t>(a)], a) < std::tie(ranks[static_cast<size_t>(b)], b);
    });
    std::vector<int> sigma(static_cast<size_t>(m));
    for (int pos = 0; pos < m; ++pos) sigma[static_cast<size_t>(order[static_cast<size_t>(pos)])] = pos + 1;
    return Permutation(std::move(sigma));
}

Permutation skew_induced_permutation(const SkewDriveConfig& cfg, Rng& rng) {
    SkewFlow flow = sample_skew_flow(cfg, rng);
    const int m = cfg.grid > 0 ? cfg.grid : std::max(64, flow.steps() / 4);
    return skew_flow_permutation(flow, m);
}

GridPermuton skew_permuton_simulate(const SkewDriveConfig& cfg, Rng& rng) {
    return permuton_of(skew_induced_permutation(cfg, rng));
}

double skew_occupation_fraction(double rho, double q, int horizon, int reps, Rng& rng) {
    const double s = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    const int half = horizon / 2;
    int positive = 0;
    for (int r = 0; r < reps; ++r) {
        double z = 0.0;
        for (int t = 1; t <= half; ++t) {
            double g1 = rng.gaussian(), g2 = rng.gaussian();
            double dxt = g1, dyt = rho * g1 + s * g2;
            z = skew_step(z, dxt, dyt, rng.bernoulli(q) ? 1.0 : -1.0);
        }
        if (z > 0.0) ++positive;
    }
    return static_cast<double>(positive) / reps;
}

}  // namespace permlab
