#include "permlab/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

namespace permlab {

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : vals_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Permutation: values must be a bijection of [n]");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), unchecked_t{});
}

Permutation Permutation::decreasing(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(v), unchecked_t{});
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> vals;
    if (text.find(' ') == std::string::npos && !text.empty() &&
        std::all_of(text.begin(), text.end(), [](char c) { return c >= '1' && c <= '9'; })) {
        for (char c : text) vals.push_back(c - '0');
    } else {
        std::istringstream in(text);
        int v;
        while (in >> v) vals.push_back(v);
    }
    return Permutation(std::move(vals));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(vals_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(inv), unchecked_t{});
}

Permutation Permutation::reverse() const {
    std::vector<int> v(vals_.rbegin(), vals_.rend());
    return Permutation(std::move(v), unchecked_t{});
}

Permutation Permutation::complement() const {
    const int n = size();
    std::vector<int> v(vals_.size());
    for (size_t i = 0; i < vals_.size(); ++i) v[i] = n + 1 - vals_[i];
    return Permutation(std::move(v), unchecked_t{});
}

Permutation Permutation::rotate_cw() const {
    const int n = size();
    std::vector<int> v(vals_.size());
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>((*this)(i)) - 1] = n + 1 - i;
    return Permutation(std::move(v), unchecked_t{});
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < vals_.size(); ++i) {
        if (i) out << ' ';
        out << vals_[i];
    }
    return out.str();
}

std::string Permutation::to_json() const {
    std::ostringstream out;
    out << "{\"n\": " << size() << ", \"values\": [";
    for (size_t i = 0; i < vals_.size(); ++i) {
        if (i) out << ", ";
        out << vals_[i];
    }
    out << "]}";
    return out.str();
}

namespace {

template <typename T>
Permutation standardize_impl(const std::vector<T>& seq) {
    const int n = static_cast<int>(seq.size());
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&seq](int a, int b) {
        return seq[static_cast<size_t>(a)] < seq[static_cast<size_t>(b)];
    });
    for (int r = 0; r + 1 < n; ++r)
        if (seq[static_cast<size_t>(order[static_cast<size_t>(r)])] ==
            seq[static_cast<size_t>(order[static_cast<size_t>(r + 1)])])
            throw std::invalid_argument("standardize: tied entries");
    std::vector<int> vals(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) vals[static_cast<size_t>(order[static_cast<size_t>(r)])] = r + 1;
    return Permutation(std::move(vals));
}

}  // namespace

Permutation standardize(const std::vector<double>& seq) { return standardize_impl(seq); }
Permutation standardize_ints(const std::vector<int>& seq) { return standardize_impl(seq); }

Permutation pattern_at(const Permutation& sigma, const std::vector<int>& index_set) {
    std::vector<int> sub;
    sub.reserve(index_set.size());
    int prev = 0;
    for (int i : index_set) {
        if (i < 1 || i > sigma.size()) throw std::out_of_range("pattern_at: index out of range");
        if (i <= prev) throw std::invalid_argument("pattern_at: indices must strictly increase");
        prev = i;
        sub.push_back(sigma(i));
    }
    return standardize_ints(sub);
}

namespace {

// Backtracking matcher. Chooses positions left to right; prunes with the
// value constraints implied by the already placed pattern entries. Counts all
// occurrences, or stops at the first if `first_only`, recording it in `hit`.
class Matcher {
public:
    Matcher(const Permutation& pi, const Permutation& sigma, bool first_only)
        : pi_(pi), sigma_(sigma), k_(pi.size()), n_(sigma.size()), first_only_(first_only) {
        chosen_.resize(static_cast<size_t>(k_));
    }

    unsigned long long run() {
        if (k_ == 0) {
            count_ = 1;
            if (first_only_) hit_ = std::vector<int>{};
            return count_;
        }
        if (k_ > n_) return 0;
        search(0, 1);
        return count_;
    }

    std::optional<std::vector<int>> hit() const { return hit_; }

private:
    void search(int depth, int start) {
        if (depth == k_) {
            ++count_;
            if (first_only_) hit_ = chosen_;
            return;
        }
        for (int pos = start; pos <= n_ - (k_ - depth - 1); ++pos) {
            int v = sigma_(pos);
            // lower/upper bounds from placed entries
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                bool need_less = pi_(d + 1) > pi_(depth + 1);
                int placed = sigma_(chosen_[static_cast<size_t>(d)]);
                ok = need_less ? (v < placed) : (v > placed);
            }
            if (!ok) continue;
            chosen_[static_cast<size_t>(depth)] = pos;
            search(depth + 1, pos + 1);
            if (first_only_ && count_ > 0) return;
        }
    }

    const Permutation& pi_;
    const Permutation& sigma_;
    int k_, n_;
    bool first_only_;
    std::vector<int> chosen_;
    unsigned long long count_ = 0;
    std::optional<std::vector<int>> hit_;
};

}  // namespace

unsigned long long count_occurrences(const Permutation& pi, const Permutation& sigma) {
    const int k = pi.size(), n = sigma.size();
    if (k == 0) return 1;
    if (k > n) return 0;
    if (k <= 4) {
        // plain subset enumeration; at desk scale this is the simplest oracle
        std::vector<int> idx(static_cast<size_t>(k));
        unsigned long long total = 0;
        std::function<void(int, int)> rec = [&](int depth, int start) {
            if (depth == k) {
                total += pattern_at(sigma, idx) == pi ? 1 : 0;
                return;
            }
            for (int i = start; i <= n - (k - depth - 1); ++i) {
                idx[static_cast<size_t>(depth)] = i;
                rec(depth + 1, i + 1);
            }
        };
        rec(0, 1);
        return total;
    }
    Matcher m(pi, sigma, false);
    return m.run();
}

unsigned long long count_consecutive(const Permutation& pi, const Permutation& sigma) {
    const int k = pi.size(), n = sigma.size();
    if (k == 0) return 1;
    if (k > n) return 0;
    unsigned long long total = 0;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int a = 1; a + k - 1 <= n; ++a) {
        std::iota(idx.begin(), idx.end(), a);
        if (pattern_at(sigma, idx) == pi) ++total;
    }
    return total;
}

PatternCounts pattern_counts(const Permutation& pi, const Permutation& sigma) {
    PatternCounts out;
    const int k = pi.size(), n = sigma.size();
    out.occ = count_occurrences(pi, sigma);
    out.cocc = count_consecutive(pi, sigma);
    if (n > 0 && k <= n) {
        double denom = 1.0;
        for (int i = 0; i < k; ++i) denom *= static_cast<double>(n - i) / static_cast<double>(i + 1);
        out.pocc = static_cast<double>(out.occ) / denom;
        out.cocc_norm = static_cast<double>(out.cocc) / static_cast<double>(n);
    }
    return out;
}

std::optional<std::vector<int>> find_occurrence(const Permutation& pi, const Permutation& sigma) {
    Matcher m(pi, sigma, true);
    m.run();
    return m.hit();
}

bool avoids(const Permutation& sigma, const Permutation& pattern) {
    return !find_occurrence(pattern, sigma).has_value();
}

bool avoids_all(const Permutation& sigma, const std::vector<Permutation>& patterns) {
    for (const auto& p : patterns)
        if (!avoids(sigma, p)) return false;
    return true;
}

RecordSets records(const Permutation& sigma) {
    RecordSets r;
    const int n = sigma.size();
    int run_max = 0, run_min = n + 1;
    for (int i = 1; i <= n; ++i) {
        int v = sigma(i);
        if (v > run_max) {
            run_max = v;
            r.lr_max.push_back({i, v});
        }
        if (v < run_min) {
            run_min = v;
            r.lr_min.push_back({i, v});
        }
    }
    run_max = 0;
    run_min = n + 1;
    for (int i = n; i >= 1; --i) {
        int v = sigma(i);
        if (v > run_max) {
            run_max = v;
            r.rl_max.push_back({i, v});
        }
        if (v < run_min) {
            run_min = v;
            r.rl_min.push_back({i, v});
        }
    }
    std::sort(r.rl_max.begin(), r.rl_max.end());
    std::sort(r.rl_min.begin(), r.rl_min.end());
    return r;
}

std::vector<Point> internal_points(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<char> external(static_cast<size_t>(n) + 1, 0);
    RecordSets r = records(sigma);
    for (const auto* set : {&r.lr_max, &r.lr_min, &r.rl_max, &r.rl_min})
        for (const Point& p : *set) external[static_cast<size_t>(p.pos)] = 1;
    std::vector<Point> out;
    for (int i = 1; i <= n; ++i)
        if (!external[static_cast<size_t>(i)]) out.push_back({i, sigma(i)});
    return out;
}

bool is_square(const Permutation& sigma) { return internal_points(sigma).empty(); }

Permutation direct_sum(const Permutation& tau, const Permutation& sigma) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(tau.size() + sigma.size()));
    for (int x : tau.values()) v.push_back(x);
    for (int x : sigma.values()) v.push_back(x + tau.size());
    return Permutation(std::move(v));
}

Permutation skew_sum(const Permutation& tau, const Permutation& sigma) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(tau.size() + sigma.size()));
    for (int x : tau.values()) v.push_back(x + sigma.size());
    for (int x : sigma.values()) v.push_back(x);
    return Permutation(std::move(v));
}

Permutation substitute(const Permutation& theta, const std::vector<Permutation>& blocks) {
    const int d = theta.size();
    if (static_cast<int>(blocks.size()) != d)
        throw std::invalid_argument("substitute: arity mismatch");
    std::vector<int> offset(static_cast<size_t>(d), 0);
    // block i receives values above all blocks j with theta(j) < theta(i)
    for (int i = 1; i <= d; ++i) {
        if (blocks[static_cast<size_t>(i - 1)].empty())
            throw std::invalid_argument("substitute: empty block");
        for (int j = 1; j <= d; ++j)
            if (theta(j) < theta(i))
                offset[static_cast<size_t>(i - 1)] += blocks[static_cast<size_t>(j - 1)].size();
    }
    std::vector<int> v;
    for (int i = 1; i <= d; ++i)
        for (int x : blocks[static_cast<size_t>(i - 1)].values())
            v.push_back(x + offset[static_cast<size_t>(i - 1)]);
    return Permutation(std::move(v));
}

bool is_sum_decomposable(const Permutation& sigma) {
    const int n = sigma.size();
    int run_max = 0;
    for (int i = 1; i < n; ++i) {
        run_max = std::max(run_max, sigma(i));
        if (run_max == i) return true;
    }
    return false;
}

bool is_skew_decomposable(const Permutation& sigma) {
    const int n = sigma.size();
    int run_min = n + 1;
    for (int i = 1; i < n; ++i) {
        run_min = std::min(run_min, sigma(i));
        if (run_min == n - i + 1) return true;
    }
    return false;
}

bool is_simple(const Permutation& sigma) {
    const int n = sigma.size();
    if (n <= 2) return false;
    for (int a = 1; a <= n; ++a) {
        int lo = sigma(a), hi = sigma(a);
        for (int b = a + 1; b <= n; ++b) {
            lo = std::min(lo, sigma(b));
            hi = std::max(hi, sigma(b));
            int len = b - a + 1;
            if (len == n) break;
            if (hi - lo + 1 == len) return false;  // nontrivial block
        }
    }
    return true;
}

bool is_baxter(const Permutation& sigma) {
    const int n = sigma.size();
    for (int j = 2; j + 1 <= n; ++j) {
        int sj = sigma(j), sj1 = sigma(j + 1);
        for (int i = 1; i < j; ++i) {
            int si = sigma(i);
            for (int k = j + 1; k <= n; ++k) {
                int sk = sigma(k);
                if (sj1 < si && si < sk && sk < sj) return false;
                if (sj < sk && sk < si && si < sj1) return false;
            }
        }
    }
    return true;
}

int enumeration_cap() {
    if (const char* env = std::getenv("PERMLAB_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 10;
}

std::vector<Permutation> enumerate_class(int n, const std::function<bool(const Permutation&)>& pred) {
    if (n > enumeration_cap())
        throw std::invalid_argument("enumerate_class: n exceeds cap (set PERMLAB_CAP to raise)");
    std::vector<Permutation> out;
    if (n == 0) {
        if (pred(Permutation{})) out.push_back(Permutation{});
        return out;
    }
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        Permutation p{std::vector<int>(v)};
        if (pred(p)) out.push_back(std::move(p));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    return r;
}

unsigned long long catalan(int n) { return binomial(2 * n, n) / static_cast<unsigned long long>(n + 1); }

}  // namespace permlab
