#include "permlab/rooted.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace permlab {

RootedPermutation restrict_window(const Permutation& sigma, int i, int h) {
    const int n = sigma.size();
    if (i < 1 || i > n) throw std::out_of_range("restrict_window: root out of range");
    if (h < 0) throw std::invalid_argument("restrict_window: negative radius");
    int a = std::max(1, i - h), b = std::min(n, i + h);
    std::vector<int> idx(static_cast<size_t>(b - a + 1));
    std::iota(idx.begin(), idx.end(), a);
    return {pattern_at(sigma, idx), i - a + 1};
}

RootedPermutation restrict_window(const RootedPermutation& r, int h) {
    return restrict_window(r.perm, r.root, h);
}

namespace {

int saturation_radius(const RootedPermutation& r) {
    return std::max(r.root - 1, r.perm.size() - r.root);
}

}  // namespace

double local_distance(const RootedPermutation& a, const RootedPermutation& b) {
    int cap = std::max(std::max(saturation_radius(a), saturation_radius(b)), 1);
    int best = 0;
    for (int h = 1; h <= cap; ++h) {
        if (restrict_window(a, h) == restrict_window(b, h))
            best = h;
        else
            break;
    }
    return std::ldexp(1.0, -best);
}

std::map<RootedPermutation, long long> restriction_histogram(const Permutation& sigma, int h) {
    if (sigma.size() < 1) throw std::invalid_argument("restriction_histogram: empty permutation");
    std::map<RootedPermutation, long long> counts;
    for (int i = 1; i <= sigma.size(); ++i) counts[restrict_window(sigma, i, h)]++;
    return counts;
}

LimitVariant limit_variant_from_string(const std::string& name) {
    if (name == "av321") return LimitVariant::Av321;
    if (name == "square1") return LimitVariant::Square1;
    if (name == "square2") return LimitVariant::Square2;
    if (name == "square3") return LimitVariant::Square3;
    if (name == "square4") return LimitVariant::Square4;
    if (name == "square") return LimitVariant::SquareMixed;
    throw std::invalid_argument("unknown limit variant: " + name);
}

RootedPermutation order_window(const std::vector<bool>& plus_labels, int order_index) {
    const int w = static_cast<int>(plus_labels.size());
    if (w % 2 == 0 || w == 0) throw std::invalid_argument("order_window: window size must be odd");
    if (order_index < 1 || order_index > 4) throw std::invalid_argument("order_window: order index");
    std::vector<int> minus_pos, plus_pos;  // positions 1..w
    for (int p = 1; p <= w; ++p) (plus_labels[static_cast<size_t>(p - 1)] ? plus_pos : minus_pos).push_back(p);
    // orders 2 and 4 reverse the "-" block; orders 3 and 4 reverse the "+" block
    if (order_index == 2 || order_index == 4) std::reverse(minus_pos.begin(), minus_pos.end());
    if (order_index == 3 || order_index == 4) std::reverse(plus_pos.begin(), plus_pos.end());
    std::vector<int> vals(static_cast<size_t>(w));
    int rank = 1;
    for (int p : minus_pos) vals[static_cast<size_t>(p - 1)] = rank++;
    for (int p : plus_pos) vals[static_cast<size_t>(p - 1)] = rank++;
    return {Permutation(std::move(vals)), (w + 1) / 2};
}

int square_order_index(double u, double v) {
    if (u < 0.5 && u <= v && v <= 1.0 - u) return 1;
    if (v < std::min(u, 1.0 - u)) return 2;
    if (v > std::max(u, 1.0 - u)) return 3;
    return 4;  // u >= 1/2 and 1-u <= v <= u
}

RootedPermutation limit_restriction_sampler(LimitVariant variant, int h, Rng& rng) {
    if (h < 0) throw std::invalid_argument("limit_restriction_sampler: negative radius");
    const int w = 2 * h + 1;
    std::vector<bool> labels(static_cast<size_t>(w));
    for (int p = 0; p < w; ++p) labels[static_cast<size_t>(p)] = rng.fair_coin();
    int j = 1;
    switch (variant) {
        case LimitVariant::Av321:
        case LimitVariant::Square1: j = 1; break;
        case LimitVariant::Square2: j = 2; break;
        case LimitVariant::Square3: j = 3; break;
        case LimitVariant::Square4: j = 4; break;
        case LimitVariant::SquareMixed: j = square_order_index(rng.uniform(), rng.uniform()); break;
    }
    return order_window(labels, j);
}

WindowLaw limit_restriction_law(LimitVariant variant, int h) {
    const int w = 2 * h + 1;
    WindowLaw law;
    std::vector<int> orders;
    switch (variant) {
        case LimitVariant::Av321:
        case LimitVariant::Square1: orders = {1}; break;
        case LimitVariant::Square2: orders = {2}; break;
        case LimitVariant::Square3: orders = {3}; break;
        case LimitVariant::Square4: orders = {4}; break;
        case LimitVariant::SquareMixed: orders = {1, 2, 3, 4}; break;
    }
    law.denom = static_cast<long long>(orders.size()) << w;
    for (uint64_t mask = 0; mask < (1ULL << w); ++mask) {
        std::vector<bool> labels(static_cast<size_t>(w));
        for (int p = 0; p < w; ++p) labels[static_cast<size_t>(p)] = (mask >> p) & 1ULL;
        for (int j : orders) law.weight[order_window(labels, j)]++;
    }
    return law;
}

std::vector<ConcentrationRow> concentration_experiment(const std::string& family_name,
                                                       const PermSampler& sampler,
                                                       const std::vector<Permutation>& patterns,
                                                       int n, int reps, uint64_t seed) {
    if (reps < 2) throw std::invalid_argument("concentration_experiment: reps must be >= 2");
    std::vector<std::vector<double>> stats(patterns.size());
    Rng base(seed);
    for (int r = 0; r < reps; ++r) {
        Rng stream = base.substream("concentration", static_cast<uint64_t>(r));
        Permutation sample = sampler(n, stream);
        for (size_t p = 0; p < patterns.size(); ++p) {
            double cocc = static_cast<double>(count_consecutive(patterns[p], sample));
            stats[p].push_back(n > 0 ? cocc / n : 0.0);
        }
    }
    std::vector<ConcentrationRow> rows;
    for (size_t p = 0; p < patterns.size(); ++p) {
        double mean = 0.0;
        for (double x : stats[p]) mean += x;
        mean /= static_cast<double>(reps);
        double var = 0.0;
        for (double x : stats[p]) var += (x - mean) * (x - mean);
        var /= static_cast<double>(reps - 1);
        rows.push_back({family_name, patterns[p].to_string(), n, reps, mean, var, seed});
    }
    return rows;
}

std::string concentration_csv(const std::vector<ConcentrationRow>& rows) {
    std::ostringstream out;
    out << "family,pi,n,rep_count,mean,variance,seed\n";
    out.precision(12);
    for (const auto& r : rows) {
        std::string pi = r.pattern;
        std::replace(pi.begin(), pi.end(), ' ', '-');
        out << r.family << ',' << pi << ',' << r.n << ',' << r.reps << ',' << r.mean << ',' << r.variance
            << ',' << r.seed << '\n';
    }
    return out.str();
}

}  // namespace permlab
