#include "permlab/square.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace permlab {

bool AnchoredPair::good() const {
    const int n = size();
    if (n < 1 || static_cast<int>(y.size()) != n || z0 < 1 || z0 > n) return false;
    return x.front() == 'D' && x.back() == 'D' && x[static_cast<size_t>(z0) - 1] == 'D' &&
           y.front() == 'L' && y.back() == 'L';
}

std::string AnchoredPair::to_text() const { return x + "/" + y + "/" + std::to_string(z0); }

AnchoredPair AnchoredPair::from_text(const std::string& text) {
    auto first = text.find('/');
    auto second = text.find('/', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw std::invalid_argument("AnchoredPair: expected X/Y/z0");
    AnchoredPair p;
    p.x = text.substr(0, first);
    p.y = text.substr(first + 1, second - first - 1);
    p.z0 = std::stoi(text.substr(second + 1));
    if (p.x.size() != p.y.size()) throw std::invalid_argument("AnchoredPair: length mismatch");
    for (char c : p.x)
        if (c != 'U' && c != 'D') throw std::invalid_argument("AnchoredPair: X alphabet");
    for (char c : p.y)
        if (c != 'L' && c != 'R') throw std::invalid_argument("AnchoredPair: Y alphabet");
    if (p.z0 < 1 || p.z0 > p.size()) throw std::invalid_argument("AnchoredPair: anchor range");
    return p;
}

AnchoredPair project_phi(const Permutation& sigma) {
    const int n = sigma.size();
    if (n < 1) throw std::invalid_argument("project_phi: empty permutation");
    if (!is_square(sigma)) throw std::invalid_argument("project_phi: permutation is not square");

    RecordSets rec = records(sigma);
    std::vector<char> lrm(static_cast<size_t>(n) + 1, 0), lrM(static_cast<size_t>(n) + 1, 0),
        rlm(static_cast<size_t>(n) + 1, 0), rlM(static_cast<size_t>(n) + 1, 0);
    for (const Point& p : rec.lr_min) lrm[static_cast<size_t>(p.pos)] = 1;
    for (const Point& p : rec.lr_max) lrM[static_cast<size_t>(p.pos)] = 1;
    for (const Point& p : rec.rl_min) rlm[static_cast<size_t>(p.pos)] = 1;
    for (const Point& p : rec.rl_max) rlM[static_cast<size_t>(p.pos)] = 1;
    auto is_double = [&](int i) {
        return (lrM[static_cast<size_t>(i)] && rlm[static_cast<size_t>(i)]) ||
               (lrm[static_cast<size_t>(i)] && rlM[static_cast<size_t>(i)]);
    };

    AnchoredPair out;
    out.x.assign(static_cast<size_t>(n), '?');
    out.y.assign(static_cast<size_t>(n), '?');
    Permutation inv = sigma.inverse();

    out.x[0] = out.x[static_cast<size_t>(n) - 1] = 'D';
    for (int i = 2; i <= n - 1; ++i)
        out.x[static_cast<size_t>(i) - 1] =
            (is_double(i) || lrm[static_cast<size_t>(i)] || rlm[static_cast<size_t>(i)]) ? 'D' : 'U';

    out.y[0] = out.y[static_cast<size_t>(n) - 1] = 'L';
    for (int v = 2; v <= n - 1; ++v) {
        int i = inv(v);
        out.y[static_cast<size_t>(v) - 1] =
            (is_double(i) || lrm[static_cast<size_t>(i)] || lrM[static_cast<size_t>(i)]) ? 'L' : 'R';
    }

    out.z0 = inv(1);
    return out;
}

namespace {

struct LabelStats {
    std::vector<int> ct;   // ct[i], i in [0..n]
    std::vector<int> pos;  // pos[i], i in [0..n]; pos[i] = n beyond the count
    int total = 0;
};

LabelStats label_stats(const std::string& seq, char label) {
    const int n = static_cast<int>(seq.size());
    LabelStats s;
    s.ct.assign(static_cast<size_t>(n) + 1, 0);
    s.pos.assign(static_cast<size_t>(n) + 1, n);
    s.pos[0] = 0;
    int c = 0;
    for (int i = 1; i <= n; ++i) {
        if (seq[static_cast<size_t>(i) - 1] == label) {
            ++c;
            s.pos[static_cast<size_t>(c)] = i;
        }
        s.ct[static_cast<size_t>(i)] = c;
    }
    s.total = c;
    return s;
}

// |g(i)-g(j)| < bound_scale * (i-j)^0.6 for all 0 <= j < i <= m at distances
// > dmin. Geometric distance classes with sparse min/max tables; a class is
// scanned exactly only when its conservative bound cannot decide it.
bool distance_condition(const std::vector<int>& g, int m, double dmin, double bound_scale) {
    if (m < 1) return true;
    const int size = m + 1;
    int levels = 1;
    while ((1 << levels) <= size) ++levels;
    std::vector<std::vector<int>> mn(static_cast<size_t>(levels)), mx(static_cast<size_t>(levels));
    mn[0].assign(g.begin(), g.begin() + size);
    mx[0] = mn[0];
    for (int s = 1; s < levels; ++s) {
        int len = size - (1 << s) + 1;
        if (len <= 0) break;
        mn[static_cast<size_t>(s)].resize(static_cast<size_t>(len));
        mx[static_cast<size_t>(s)].resize(static_cast<size_t>(len));
        for (int i = 0; i < len; ++i) {
            mn[static_cast<size_t>(s)][static_cast<size_t>(i)] =
                std::min(mn[static_cast<size_t>(s - 1)][static_cast<size_t>(i)],
                         mn[static_cast<size_t>(s - 1)][static_cast<size_t>(i + (1 << (s - 1)))]);
            mx[static_cast<size_t>(s)][static_cast<size_t>(i)] =
                std::max(mx[static_cast<size_t>(s - 1)][static_cast<size_t>(i)],
                         mx[static_cast<size_t>(s - 1)][static_cast<size_t>(i + (1 << (s - 1)))]);
        }
    }
    auto range_minmax = [&](int lo, int hi) {
        int s = 0;
        while ((1 << (s + 1)) <= hi - lo + 1) ++s;
        int a = std::min(mn[static_cast<size_t>(s)][static_cast<size_t>(lo)],
                         mn[static_cast<size_t>(s)][static_cast<size_t>(hi - (1 << s) + 1)]);
        int b = std::max(mx[static_cast<size_t>(s)][static_cast<size_t>(lo)],
                         mx[static_cast<size_t>(s)][static_cast<size_t>(hi - (1 << s) + 1)]);
        return std::pair<int, int>(a, b);
    };

    const int d_lo = static_cast<int>(std::floor(dmin)) + 1;
    for (int i = d_lo; i <= m; ++i) {
        int gi = g[static_cast<size_t>(i)];
        int d = d_lo;
        while (i - d >= 0) {
            int d_hi = std::min(i, 2 * d - 1);  // distances in [d, d_hi]
            auto [lo_val, hi_val] = range_minmax(i - d_hi, i - d);
            double worst = std::max(std::abs(gi - lo_val), std::abs(gi - hi_val));
            if (worst >= bound_scale * std::pow(static_cast<double>(d), 0.6)) {
                for (int j = i - d_hi; j <= i - d; ++j) {
                    double bound = bound_scale * std::pow(static_cast<double>(i - j), 0.6);
                    if (std::abs(gi - g[static_cast<size_t>(j)]) >= bound) return false;
                }
            }
            d = d_hi + 1;
        }
    }
    return true;
}

// |g(i)-g(j)| < cap for all pairs at distance < w (sliding window min/max).
bool window_condition(const std::vector<int>& g, int m, double w, double cap) {
    const int width = std::max(0, static_cast<int>(std::ceil(w)) - 1);  // distances <= width
    if (width == 0) return true;
    std::deque<int> qmin, qmax;
    for (int i = 0; i <= m; ++i) {
        while (!qmin.empty() && qmin.front() < i - width) qmin.pop_front();
        while (!qmax.empty() && qmax.front() < i - width) qmax.pop_front();
        if (!qmin.empty() && g[static_cast<size_t>(i)] - g[static_cast<size_t>(qmin.front())] >= cap)
            return false;
        if (!qmax.empty() && g[static_cast<size_t>(qmax.front())] - g[static_cast<size_t>(i)] >= cap)
            return false;
        while (!qmin.empty() && g[static_cast<size_t>(qmin.back())] >= g[static_cast<size_t>(i)]) qmin.pop_back();
        qmin.push_back(i);
        while (!qmax.empty() && g[static_cast<size_t>(qmax.back())] <= g[static_cast<size_t>(i)]) qmax.pop_back();
        qmax.push_back(i);
    }
    return true;
}

}  // namespace

PetrovReport petrov_check(const std::string& seq, char label) {
    const int n = static_cast<int>(seq.size());
    LabelStats s = label_stats(seq, label);
    const double n4 = std::pow(n, 0.4), n6 = std::pow(n, 0.6), n3 = std::pow(n, 0.3);

    // ct conditions track 2*ct(i) - i so the slope-1/2 drift becomes integral
    std::vector<int> gct(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) gct[static_cast<size_t>(i)] = 2 * s.ct[static_cast<size_t>(i)] - i;
    const int K = s.total;
    std::vector<int> gpos(static_cast<size_t>(K) + 1);
    for (int i = 0; i <= K; ++i) gpos[static_cast<size_t>(i)] = s.pos[static_cast<size_t>(i)] - 2 * i;

    PetrovReport rep;
    rep.condition[0] = window_condition(gct, n, n6, 2.0 * n4);
    rep.condition[1] = distance_condition(gct, n, n3, 1.0);  // 2*(1/2)*(i-j)^.6
    rep.condition[2] = window_condition(gpos, K, n6, n4);
    rep.condition[3] = distance_condition(gpos, K, n3, 2.0);
    rep.condition[4] = true;
    for (int i = 0; i <= n && rep.condition[4]; ++i)
        if (std::abs(2 * s.ct[static_cast<size_t>(i)] - i) >= 2.0 * n6) rep.condition[4] = false;
    rep.condition[5] = true;
    for (int i = 0; i <= K && rep.condition[5]; ++i)
        if (std::abs(s.pos[static_cast<size_t>(i)] - 2 * i) >= 2.0 * n6) rep.condition[5] = false;
    rep.pass = rep.condition[0] && rep.condition[1] && rep.condition[2] && rep.condition[3] &&
               rep.condition[4] && rep.condition[5];
    return rep;
}

bool petrov_pair_ok(const AnchoredPair& pair) {
    return petrov_check(pair.x, 'D').pass && petrov_check(pair.x, 'U').pass &&
           petrov_check(pair.y, 'L').pass && petrov_check(pair.y, 'R').pass;
}

bool in_omega(const AnchoredPair& pair, double delta_exp) {
    if (!pair.good()) return false;
    const int n = pair.size();
    const int delta = static_cast<int>(std::ceil(std::pow(n, delta_exp)));
    if (pair.z0 < delta || pair.z0 > n - delta) return false;
    return petrov_pair_ok(pair);
}

RhoParts rho_parts(const AnchoredPair& pair) {
    if (!pair.good()) throw std::invalid_argument("rho: anchored pair is not good");
    const int n = pair.size();
    LabelStats D = label_stats(pair.x, 'D'), U = label_stats(pair.x, 'U');
    LabelStats L = label_stats(pair.y, 'L'), R = label_stats(pair.y, 'R');
    auto pos_of = [n](const LabelStats& s, int i) {
        if (i < 0) throw ConstructionFailure("rho: negative label index");
        if (i > n) return n;
        return s.pos[static_cast<size_t>(i)];
    };

    RhoParts out;
    const int ctDz0 = D.ct[static_cast<size_t>(pair.z0)];
    out.z1 = pos_of(L, ctDz0);
    out.z2 = pos_of(U, L.total - ctDz0);
    out.z3 = pos_of(R, D.total - ctDz0);

    for (int i = 1; i <= ctDz0; ++i) out.lambda1.push_back({pos_of(D, i), pos_of(L, ctDz0 + 1 - i)});
    const int ctUz2 = U.ct[static_cast<size_t>(out.z2)];
    for (int i = 1; i <= ctUz2; ++i) out.lambda2.push_back({pos_of(U, i), pos_of(L, ctDz0 + i)});
    for (int i = ctDz0 + 1; i <= D.total; ++i) out.lambda3.push_back({pos_of(D, i), pos_of(R, i - ctDz0)});
    for (int i = ctUz2 + 1; i <= U.total; ++i)
        out.lambda4.push_back({pos_of(U, i), pos_of(R, n - ctDz0 + 1 - i)});
    return out;
}

Permutation reconstruct_rho(const AnchoredPair& pair, double delta_exp, bool check_omega) {
    if (check_omega && !in_omega(pair, delta_exp))
        throw std::invalid_argument("rho: anchored pair is not regular (outside Omega_n)");
    RhoParts parts = rho_parts(pair);
    const int n = pair.size();
    std::vector<int> vals(static_cast<size_t>(n), 0);
    std::vector<char> value_used(static_cast<size_t>(n) + 1, 0);
    auto place = [&](const Point& p) {
        if (p.pos < 1 || p.pos > n || p.val < 1 || p.val > n)
            throw ConstructionFailure("rho: matched point out of range");
        if (vals[static_cast<size_t>(p.pos) - 1] != 0 || value_used[static_cast<size_t>(p.val)])
            throw ConstructionFailure("rho: label matching collides; pair is not reconstructible");
        vals[static_cast<size_t>(p.pos) - 1] = p.val;
        value_used[static_cast<size_t>(p.val)] = 1;
    };
    for (const auto* lam : {&parts.lambda1, &parts.lambda2, &parts.lambda3, &parts.lambda4})
        for (const Point& p : *lam) place(p);
    for (int i = 0; i < n; ++i)
        if (vals[static_cast<size_t>(i)] == 0)
            throw ConstructionFailure("rho: label matching leaves empty columns");
    return Permutation(std::move(vals));
}

AnchoredPair sample_good_pair(int n, Rng& rng) {
    if (n < 3) throw std::invalid_argument("sample_good_pair: n too small");
    AnchoredPair p;
    // z0 weights: 2 for each boundary anchor, 1 for each of the n-2 interior
    uint64_t w = rng.below(static_cast<uint64_t>(n + 2));
    if (w < 2)
        p.z0 = 1;
    else if (w < 4)
        p.z0 = n;
    else
        p.z0 = 2 + static_cast<int>(w - 4);
    p.x.assign(static_cast<size_t>(n), 'D');
    p.y.assign(static_cast<size_t>(n), 'L');
    for (int i = 2; i <= n - 1; ++i)
        if (i != p.z0) p.x[static_cast<size_t>(i) - 1] = rng.fair_coin() ? 'U' : 'D';
    for (int i = 2; i <= n - 1; ++i) p.y[static_cast<size_t>(i) - 1] = rng.fair_coin() ? 'R' : 'L';
    return p;
}

bool rho_reconstructible(const AnchoredPair& pair, double delta_exp) {
    if (!pair.good()) return false;
    const int n = pair.size();
    const int delta = static_cast<int>(std::ceil(std::pow(n, delta_exp)));
    if (pair.z0 < delta || pair.z0 > n - delta) return false;
    try {
        Permutation sigma = reconstruct_rho(pair, delta_exp, false);
        return is_square(sigma) && project_phi(sigma) == pair;
    } catch (const ConstructionFailure&) {
        return false;
    }
}

Permutation sample_square(int n, Rng& rng, double delta_exp, int rejection_cap) {
    if (n < 64) throw std::invalid_argument("sample_square: n below the supported threshold (64)");
    const int delta = static_cast<int>(std::ceil(std::pow(n, delta_exp)));
    if (delta > n - delta)
        throw std::invalid_argument("sample_square: delta_exp makes the anchor window empty at this size");
    for (int attempt = 0; attempt < rejection_cap; ++attempt) {
        AnchoredPair p = sample_good_pair(n, rng);
        if (!rho_reconstructible(p, delta_exp)) continue;
        Permutation sigma = reconstruct_rho(p, delta_exp, false);
        if (!is_square(sigma))
            throw std::logic_error("sample_square: rho output failed the square predicate");
        return sigma;
    }
    throw std::runtime_error("sample_square: rejection cap exceeded");
}

bigint count_square(int n) {
    if (n < 1) throw std::invalid_argument("count_square: n must be >= 1");
    if (n == 1) return 1;
    if (n == 2) return 2;
    bigint a = 2 * bigint(n + 2) * boost::multiprecision::pow(bigint(4), static_cast<unsigned>(n - 3));
    bigint binom = 1;
    for (int i = 1; i <= n - 3; ++i) binom = binom * (n - 3 + i) / i;  // C(2n-6, n-3)
    return a - 4 * bigint(2 * n - 5) * binom;
}

bigint count_square_brute(int n) {
    auto cls = enumerate_class(n, [](const Permutation& s) { return is_square(s); });
    return bigint(cls.size());
}

bigint count_almost_square(int n, int k) {
    if (n + k > enumeration_cap())
        throw std::invalid_argument("count_almost_square: n+k exceeds enumeration cap");
    auto cls = enumerate_class(n + k, [k](const Permutation& s) {
        return static_cast<int>(internal_points(s).size()) == k;
    });
    return bigint(cls.size());
}

bigint good_anchored_pair_count(int n) {
    if (n < 3) throw std::invalid_argument("good_anchored_pair_count: n must be >= 3");
    return 2 * bigint(n + 2) * boost::multiprecision::pow(bigint(4), static_cast<unsigned>(n - 3));
}

bigint good_anchored_pair_count_brute(int n) {
    if (n > 12) throw std::invalid_argument("good_anchored_pair_count_brute: n too large");
    long long count = 0;
    for (uint64_t xm = 0; xm < (1ULL << n); ++xm)
        for (uint64_t ym = 0; ym < (1ULL << n); ++ym)
            for (int z0 = 1; z0 <= n; ++z0) {
                AnchoredPair p;
                p.z0 = z0;
                p.x.assign(static_cast<size_t>(n), 'D');
                p.y.assign(static_cast<size_t>(n), 'L');
                for (int i = 0; i < n; ++i) {
                    if ((xm >> i) & 1ULL) p.x[static_cast<size_t>(i)] = 'U';
                    if ((ym >> i) & 1ULL) p.y[static_cast<size_t>(i)] = 'R';
                }
                if (p.good()) ++count;
            }
    return bigint(count);
}

}  // namespace permlab
