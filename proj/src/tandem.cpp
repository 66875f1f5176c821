#include "permlab/tandem.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace permlab {

Walk2D sample_tandem_rejection(int n, Rng& rng, long long try_cap, long long* tries_out) {
    if (n < 1) throw std::invalid_argument("sample_tandem: n must be >= 1");
    long long tries = 0;
    for (;;) {
        if (try_cap >= 0 && tries >= try_cap) {
            if (tries_out) *tries_out = tries;
            throw std::runtime_error("sample_tandem_rejection: try cap exceeded");
        }
        ++tries;
        int x = 0, y = 0;
        std::vector<std::pair<int, int>> pts;
        pts.reserve(static_cast<size_t>(n));
        bool ok = true;
        for (int t = 1; t <= n + 1; ++t) {
            if (rng.fair_coin()) {
                ++x;
                --y;
            } else {
                x -= rng.geometric_half();
                y += rng.geometric_half();
            }
            if (x < 0 || y < 0) {
                ok = false;
                break;
            }
            if (t <= n) pts.push_back({x, y});
        }
        if (!ok || x != 0 || y != 0) continue;
        if (tries_out) *tries_out = tries;
        return Walk2D{std::move(pts)};
    }
}

namespace {

// Backward DP for the nu-walk conditioned to be a quadrant excursion of
// n+2 points, states confined to [0,B]^2. Layers are normalized to max 1;
// the per-layer scales accumulate into log_total.
class ExcursionDp {
public:
    explicit ExcursionDp(int n) : n_(n), B_(8 * static_cast<int>(std::sqrt(n + 2.0)) + 8), W_(B_ + 1) {
        const int steps = n_ + 1;  // transitions between times 0..n+1
        // small sizes keep every layer; large ones checkpoint at sqrt spacing
        stride_ = steps <= 512 ? 1 : std::max(1, static_cast<int>(std::sqrt(steps + 1.0)));
        layers_.assign(static_cast<size_t>(steps) + 1, {});
        std::vector<double> cur(static_cast<size_t>(W_) * static_cast<size_t>(W_), 0.0);
        cur[0] = 1.0;  // time n+1 at (0,0)
        store(steps, cur);
        std::vector<double> S(static_cast<size_t>(W_) * static_cast<size_t>(W_));
        for (int t = steps - 1; t >= 0; --t) {
            // S(x,y) = sum_j 2^{-j} h(x, y+j)
            for (int x = 0; x <= B_; ++x) {
                double acc = 0.0;
                for (int y = B_; y >= 0; --y) {
                    acc = cur[idx(x, y)] + 0.5 * acc;
                    S[idx(x, y)] = acc;
                }
            }
            std::vector<double> nxt(static_cast<size_t>(W_) * static_cast<size_t>(W_), 0.0);
            double mx = 0.0;
            for (int y = 0; y <= B_; ++y) {
                double t_acc = 0.0;  // sum_i 2^{-i} S(x-i, y), built as x grows
                for (int x = 0; x <= B_; ++x) {
                    t_acc = S[idx(x, y)] + 0.5 * t_acc;
                    double v = 0.125 * t_acc;
                    if (y >= 1 && x + 1 <= B_) v += 0.5 * cur[idx(x + 1, y - 1)];
                    nxt[idx(x, y)] = v;
                    mx = std::max(mx, v);
                }
            }
            if (mx <= 0.0) throw std::logic_error("excursion dp: dead layer");
            for (auto& v : nxt) v /= mx;
            log_total_ += std::log(mx);
            cur.swap(nxt);
            store(t, cur);
        }
        if (value(0, 0, 0) <= 0.0) throw std::logic_error("excursion dp: no excursion mass");
    }

    int box() const { return B_; }
    double log_probability() const {
        // h_0(0,0) * prod(scales); layers normalized so h_0(0,0) is the ratio
        return std::log(layer(0)[0]) + log_total_;
    }

    // h_{t}(x,y) up to the layer's normalization (valid within one layer)
    double value(int t, int x, int y) const {
        if (x < 0 || y < 0 || x > B_ || y > B_) return 0.0;
        return layer(t)[idx(x, y)];
    }

    Walk2D sample(Rng& rng) const {
        // the lazy checkpoint cache below is shared; serialize samplers
        std::lock_guard<std::mutex> lock(cache_mu_);
        std::vector<std::pair<int, int>> pts;
        pts.reserve(static_cast<size_t>(n_));
        int x = 0, y = 0;
        for (int t = 0; t <= n_; ++t) {
            const std::vector<double>& nxt = layer(t + 1);
            double w_tandem = (y >= 1 && x + 1 <= B_) ? 0.5 * nxt[idx(x + 1, y - 1)] : 0.0;
            // face steps (-i, +j), weight 2^{-i-j-3} h(x-i, y+j)
            double total = w_tandem;
            for (int i = 0; i <= x; ++i) {
                double si = 0.0;
                for (int j = 0; y + j <= B_; ++j) si += std::ldexp(nxt[idx(x - i, y + j)], -j);
                total += std::ldexp(si, -i - 3);
            }
            double u = rng.uniform() * total;
            if (u < w_tandem) {
                ++x;
                --y;
            } else {
                u -= w_tandem;
                int pick_i = -1;
                for (int i = 0; i <= x; ++i) {
                    double si = 0.0;
                    for (int j = 0; y + j <= B_; ++j) si += std::ldexp(nxt[idx(x - i, y + j)], -j);
                    double wi = std::ldexp(si, -i - 3);
                    if (u < wi) {
                        pick_i = i;
                        break;
                    }
                    u -= wi;
                }
                if (pick_i < 0) pick_i = x;  // numerical tail
                u = rng.uniform();
                double si = 0.0;
                for (int j = 0; y + j <= B_; ++j) si += std::ldexp(nxt[idx(x - pick_i, y + j)], -j);
                double acc = 0.0;
                int pick_j = 0;
                for (int j = 0; y + j <= B_; ++j) {
                    acc += std::ldexp(nxt[idx(x - pick_i, y + j)], -j);
                    if (u * si <= acc) {
                        pick_j = j;
                        break;
                    }
                }
                x -= pick_i;
                y += pick_j;
            }
            if (t + 1 <= n_) pts.push_back({x, y});
        }
        if (x != 0 || y != 0) throw std::logic_error("excursion dp: sampled path missed the endpoint");
        return Walk2D{std::move(pts)};
    }

private:
    size_t idx(int x, int y) const { return static_cast<size_t>(x) * static_cast<size_t>(W_) + static_cast<size_t>(y); }

    void store(int t, const std::vector<double>& layer_data) {
        if (t % stride_ == 0 || t == n_ + 1) layers_[static_cast<size_t>(t)] = layer_data;
    }

    const std::vector<double>& layer(int t) const {
        if (!layers_[static_cast<size_t>(t)].empty()) return layers_[static_cast<size_t>(t)];
        // recompute the block from the checkpoint above t
        int anchor = t;
        while (layers_[static_cast<size_t>(anchor)].empty()) ++anchor;
        std::vector<double> cur = layers_[static_cast<size_t>(anchor)];
        std::vector<double> S(static_cast<size_t>(W_) * static_cast<size_t>(W_));
        for (int tt = anchor - 1; tt >= t; --tt) {
            for (int x = 0; x <= B_; ++x) {
                double acc = 0.0;
                for (int y = B_; y >= 0; --y) {
                    acc = cur[idx(x, y)] + 0.5 * acc;
                    S[idx(x, y)] = acc;
                }
            }
            std::vector<double> nxt(static_cast<size_t>(W_) * static_cast<size_t>(W_), 0.0);
            double mx = 0.0;
            for (int y = 0; y <= B_; ++y) {
                double t_acc = 0.0;
                for (int x = 0; x <= B_; ++x) {
                    t_acc = S[idx(x, y)] + 0.5 * t_acc;
                    double v = 0.125 * t_acc;
                    if (y >= 1 && x + 1 <= B_) v += 0.5 * cur[idx(x + 1, y - 1)];
                    nxt[idx(x, y)] = v;
                    mx = std::max(mx, v);
                }
            }
            for (auto& v : nxt) v /= mx;
            cur.swap(nxt);
            layers_[static_cast<size_t>(tt)] = cur;
            recomputed_.push_back(tt);
        }
        trim_cache();
        return layers_[static_cast<size_t>(t)];
    }

    void trim_cache() const {
        // drop recomputed layers once the cache grows past two blocks
        while (recomputed_.size() > 2 * static_cast<size_t>(stride_)) {
            int victim = recomputed_.front();
            recomputed_.erase(recomputed_.begin());
            if (victim % stride_ != 0) layers_[static_cast<size_t>(victim)].clear();
        }
    }

    int n_, B_, W_;
    int stride_ = 1;
    double log_total_ = 0.0;
    mutable std::mutex cache_mu_;
    mutable std::vector<std::vector<double>> layers_;
    mutable std::vector<int> recomputed_;
};

}  // namespace

namespace {

// DP construction dominates sampling cost; keep one instance per size.
const ExcursionDp& cached_dp(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<ExcursionDp>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<ExcursionDp>(n)).first;
    return *it->second;
}

}  // namespace

Walk2D sample_tandem_dp(int n, Rng& rng) { return cached_dp(n).sample(rng); }

Walk2D sample_tandem(int n, Rng& rng) {
    // plain rejection accepts with probability ~ n^{-4}; beyond small sizes
    // the conditioned DP takes over
    if (n <= 10) return sample_tandem_rejection(n, rng);
    return sample_tandem_dp(n, rng);
}

Permutation sample_baxter(int n, Rng& rng) { return cpbp(wcp(sample_tandem(n, rng))); }

double log_excursion_probability(int n) { return cached_dp(n).log_probability(); }

namespace {

bool diagram_commutes(const Walk2D& w, std::string* why) {
    BipolarMap m = theta(w);
    if (!m.full()) {
        if (why) *why = "theta left unexplored edges on a tandem walk";
        return false;
    }
    Walk2D back = bow(m);
    if (back != w) {
        if (why) *why = "bow(theta(W)) != W";
        return false;
    }
    Permutation lhs = bobp(m);
    Permutation rhs = cpbp(wcp(w));
    if (lhs != rhs) {
        if (why) *why = "bobp(m) != cpbp(wcp(bow(m)))";
        return false;
    }
    if (!is_baxter(lhs)) {
        if (why) *why = "pipeline output is not Baxter";
        return false;
    }
    return true;
}

}  // namespace

DiagramReport diagram_check_exhaustive(int n) {
    DiagramReport rep;
    for (const Walk2D& w : enumerate_tandem_walks(n)) {
        ++rep.checked;
        std::string why;
        if (!diagram_commutes(w, &why)) {
            if (rep.mismatches == 0) rep.witness = why + " at " + w.to_json();
            ++rep.mismatches;
        }
    }
    return rep;
}

DiagramReport diagram_check_sampled(int n, int reps, Rng& rng) {
    DiagramReport rep;
    for (int r = 0; r < reps; ++r) {
        Walk2D w = sample_tandem(n, rng);
        ++rep.checked;
        std::string why;
        if (!diagram_commutes(w, &why)) {
            if (rep.mismatches == 0) rep.witness = why + " at " + w.to_json();
            ++rep.mismatches;
        }
    }
    return rep;
}

long long count_baxter_via_pipeline(int n) {
    std::set<Permutation> images;
    for (const Walk2D& w : enumerate_tandem_walks(n)) images.insert(bobp(theta(w)));
    return static_cast<long long>(images.size());
}

}  // namespace permlab
