#include "permlab/gentree.hpp"

#include "permlab/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include <nlohmann/json.hpp>

namespace permlab {

SuccessionRule SuccessionRule::av1423_4123() {
    SuccessionRule r;
    r.root = 2;
    r.children = [](int k) {
        std::vector<ColoredLabel> kids;
        kids.reserve(static_cast<size_t>(k));
        kids.push_back({k + 1, 'B'});
        for (int v = 3; v <= k; ++v) kids.push_back({v, 0});
        kids.push_back({k + 1, 'T'});
        return kids;
    };
    return r;
}

SuccessionRule SuccessionRule::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    SuccessionRule r;
    r.root = j.at("root").get<int>();
    const auto& ch = j.at("children");
    if (ch.is_string()) {
        std::string name = ch.get<std::string>();
        if (name == "builtin:av1423_4123") return av1423_4123();
        throw std::invalid_argument("SuccessionRule: unknown builtin " + name);
    }
    auto table = std::make_shared<std::map<int, std::vector<ColoredLabel>>>();
    for (auto it = ch.begin(); it != ch.end(); ++it) {
        std::vector<ColoredLabel> kids;
        for (const auto& e : *it) {
            std::string color = e.at(1).get<std::string>();
            kids.push_back({e.at(0).get<int>(), color.empty() ? char(0) : color[0]});
        }
        (*table)[std::stoi(it.key())] = std::move(kids);
    }
    r.children = [table](int k) {
        auto it = table->find(k);
        // labels outside the rule support have no children (count 0)
        if (it == table->end()) return std::vector<ColoredLabel>{};
        return it->second;
    };
    return r;
}

CountTable::CountTable(const SuccessionRule& rule, int n_max, int label_cap)
    : rule_(rule), n_max_(n_max), label_cap_(label_cap > 0 ? label_cap : n_max + 2) {
    // labels reachable from the root within n_max levels; the cap guards
    // against rules whose label set explodes
    // first level at which each label is reached from the root; a label first
    // seen at level L can head paths of remaining length up to n_max - L + 1
    std::vector<int> level_reached(static_cast<size_t>(label_cap_) + 1, n_max_ + 2);
    if (rule_.root < 0 || rule_.root > label_cap_)
        throw std::invalid_argument("CountTable: root label outside the cap");
    level_reached[static_cast<size_t>(rule_.root)] = 1;
    std::vector<int> frontier = {rule_.root};
    for (int level = 1; level < n_max_ && !frontier.empty(); ++level) {
        std::vector<int> next;
        for (int k : frontier)
            for (const ColoredLabel& child : rule_.children(k)) {
                if (child.value < 0 || child.value > label_cap_)
                    throw std::invalid_argument("CountTable: label growth exceeds the cap");
                if (level_reached[static_cast<size_t>(child.value)] > level + 1) {
                    level_reached[static_cast<size_t>(child.value)] = level + 1;
                    next.push_back(child.value);
                }
            }
        frontier = std::move(next);
    }
    auto needed = [&](int m, int k) { return level_reached[static_cast<size_t>(k)] <= n_max_ - m + 1; };

    c_.assign(static_cast<size_t>(n_max_) + 1, std::vector<bigint>(static_cast<size_t>(label_cap_) + 1, -1));
    for (int k = 0; k <= label_cap_; ++k)
        if (needed(1, k)) c_[1][static_cast<size_t>(k)] = 1;
    for (int m = 2; m <= n_max_; ++m)
        for (int k = 0; k <= label_cap_; ++k) {
            if (!needed(m, k)) continue;
            bigint total = 0;
            for (const ColoredLabel& child : rule_.children(k)) {
                const bigint& sub = c_[static_cast<size_t>(m) - 1][static_cast<size_t>(child.value)];
                if (sub < 0) throw std::logic_error("CountTable: dependency outside the computed set");
                total += sub;
            }
            c_[static_cast<size_t>(m)][static_cast<size_t>(k)] = std::move(total);
        }
}

const bigint& CountTable::count(int length, int label) const {
    if (length < 1 || length > n_max_ || label < 0 || label > label_cap_ ||
        c_[static_cast<size_t>(length)][static_cast<size_t>(label)] < 0)
        throw std::out_of_range("CountTable: query outside table");
    return c_[static_cast<size_t>(length)][static_cast<size_t>(label)];
}

LabelPath sample_path(const CountTable& table, int n, Rng& rng) {
    if (n < 1 || n > table.depth()) throw std::invalid_argument("sample_path: length outside table depth");
    LabelPath path;
    path.push_back({table.rule().root, 0});
    int current = table.rule().root;
    for (int level = 2; level <= n; ++level) {
        int remaining = n - level + 1;  // length of the path from the child onward
        auto kids = table.rule().children(current);
        bigint total = 0;
        for (const auto& child : kids) total += table.count(remaining, child.value);
        bigint u = uniform_bigint_below(total, rng);
        for (const auto& child : kids) {
            const bigint& w = table.count(remaining, child.value);
            if (u < w) {
                path.push_back(child);
                current = child.value;
                break;
            }
            u -= w;
        }
    }
    return path;
}

Permutation insert_final(const Permutation& sigma, int m) {
    const int n = sigma.size();
    if (m < 1 || m > n + 1) throw std::invalid_argument("insert_final: site out of range");
    std::vector<int> vals;
    vals.reserve(static_cast<size_t>(n) + 1);
    for (int v : sigma.values()) vals.push_back(v >= m ? v + 1 : v);
    vals.push_back(m);
    return Permutation(std::move(vals));
}

std::vector<int> active_sites_brute(const Permutation& sigma, const std::vector<Permutation>& avoided) {
    std::vector<int> sites;
    for (int m = 1; m <= sigma.size() + 1; ++m)
        if (avoids_all(insert_final(sigma, m), avoided)) sites.push_back(m);
    return sites;
}

Permutation realize_1423_4123(const LabelPath& path) {
    if (path.empty()) throw std::invalid_argument("realize: empty path");
    if (path.front().value != 2 || path.front().color != 0)
        throw std::invalid_argument("realize: path must start at the root label (2)");
    Permutation sigma = Permutation::identity(1);
    std::vector<int> as = {1, 2};  // active sites, increasing
    for (size_t step = 1; step < path.size(); ++step) {
        const int k = static_cast<int>(as.size());
        const int n = sigma.size();
        const ColoredLabel& lab = path[step];
        int site;
        std::vector<int> next_as;
        if (lab.color == 'B') {
            if (lab.value != k + 1) throw std::invalid_argument("realize: inconsistent blue label");
            site = 1;
            next_as = {1, 2, 3};
            for (int j = 2; j <= k - 2; ++j) next_as.push_back(as[static_cast<size_t>(j)] + 1);
            next_as.push_back(n + 2);
        } else if (lab.color == 'T') {
            if (lab.value != k + 1) throw std::invalid_argument("realize: inconsistent tangerine label");
            site = n + 1;
            next_as = {1, 2};
            for (int j = 2; j <= k - 2; ++j) next_as.push_back(as[static_cast<size_t>(j)]);
            next_as.push_back(n + 1);
            next_as.push_back(n + 2);
        } else {
            int j = lab.value - 1;  // label (j+1) uses the j-th smallest site
            if (j < 2 || j >= k) throw std::invalid_argument("realize: label value out of range");
            site = as[static_cast<size_t>(j) - 1];
            next_as = {1, 2};
            for (int idx = 2; idx < j; ++idx) next_as.push_back(as[static_cast<size_t>(idx)]);
            next_as.push_back(n + 2);
        }
        sigma = insert_final(sigma, site);
        as = std::move(next_as);
        std::sort(as.begin(), as.end());
        as.erase(std::unique(as.begin(), as.end()), as.end());  // n+2 meets "3" at size 1
        if (static_cast<int>(as.size()) != lab.value)
            throw std::invalid_argument("realize: active-site count disagrees with the label");
    }
    return sigma;
}

namespace {

// Checkpointed scaled-double rows for the Av(1423,4123) succession rule:
// row_m[k] proportional to the number of length-m paths from label k, using
// c_m(k) = 2 c_{m-1}(k+1) + sum_{v=3..k} c_{m-1}(v).
class AvRowTable {
public:
    explicit AvRowTable(int n) : n_(n), cap_(n + 2), stride_(std::max(1, static_cast<int>(std::sqrt(n + 1.0)))) {
        rows_.assign(static_cast<size_t>(n_) + 1, {});
        std::vector<double> cur(static_cast<size_t>(cap_) + 2, 1.0);  // m = 1
        store(1, cur);
        for (int m = 2; m <= n_; ++m) {
            cur = advance(cur);
            store(m, cur);
        }
    }

    // row values for remaining length m (normalized within the row)
    const std::vector<double>& row(int m) const {
        if (!rows_[static_cast<size_t>(m)].empty()) return rows_[static_cast<size_t>(m)];
        int anchor = m;
        while (rows_[static_cast<size_t>(anchor)].empty()) --anchor;
        std::vector<double> cur = rows_[static_cast<size_t>(anchor)];
        for (int mm = anchor + 1; mm <= m; ++mm) {
            cur = advance(cur);
            rows_[static_cast<size_t>(mm)] = cur;
            recomputed_.push_back(mm);
        }
        trim();
        return rows_[static_cast<size_t>(m)];
    }

private:
    std::vector<double> advance(const std::vector<double>& prev) const {
        std::vector<double> out(static_cast<size_t>(cap_) + 2, 0.0);
        std::vector<double> prefix(static_cast<size_t>(cap_) + 2, 0.0);
        for (int v = 3; v <= cap_ + 1; ++v) prefix[static_cast<size_t>(v)] = prefix[static_cast<size_t>(v) - 1] + prev[static_cast<size_t>(v)];
        double mx = 0.0;
        for (int k = 2; k <= cap_; ++k) {
            out[static_cast<size_t>(k)] = 2.0 * prev[static_cast<size_t>(k) + 1] + prefix[static_cast<size_t>(k)];
            mx = std::max(mx, out[static_cast<size_t>(k)]);
        }
        if (mx > 0)
            for (auto& v : out) v /= mx;
        return out;
    }

    void store(int m, const std::vector<double>& r) {
        if (m % stride_ == 0 || m == 1 || m == n_) rows_[static_cast<size_t>(m)] = r;
    }

    void trim() const {
        while (recomputed_.size() > 2 * static_cast<size_t>(stride_)) {
            int victim = recomputed_.front();
            recomputed_.erase(recomputed_.begin());
            if (victim % stride_ != 0 && victim != 1 && victim != n_) rows_[static_cast<size_t>(victim)].clear();
        }
    }

    int n_, cap_, stride_;
    mutable std::vector<std::vector<double>> rows_;
    mutable std::vector<int> recomputed_;
};

}  // namespace

LabelPath sample_path_av1423_large(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_path: n must be >= 1");
    SuccessionRule rule = SuccessionRule::av1423_4123();
    AvRowTable table(n);
    LabelPath path;
    path.push_back({2, 0});
    int current = 2;
    for (int level = 2; level <= n; ++level) {
        int remaining = n - level + 1;
        const std::vector<double>& row = table.row(remaining);
        auto kids = rule.children(current);
        double total = 0.0;
        for (const auto& child : kids) total += row[static_cast<size_t>(child.value)];
        double u = rng.uniform() * total;
        const ColoredLabel* picked = &kids.back();
        for (const auto& child : kids) {
            double w = row[static_cast<size_t>(child.value)];
            if (u < w) {
                picked = &child;
                break;
            }
            u -= w;
        }
        path.push_back(*picked);
        current = picked->value;
    }
    return path;
}

std::vector<CltRow> clt_scan(const Permutation& pattern, const std::vector<int>& sizes, int reps,
                             uint64_t seed) {
    if (reps < 2) throw std::invalid_argument("clt_scan: reps must be >= 2");
    const int kExactLimit = 600;
    int max_small = 0;
    for (int n : sizes)
        if (n <= kExactLimit) max_small = std::max(max_small, n);
    std::unique_ptr<CountTable> table;
    if (max_small > 0) table = std::make_unique<CountTable>(SuccessionRule::av1423_4123(), max_small);

    std::vector<CltRow> rows;
    Rng base(seed);
    for (int n : sizes) {
        std::vector<double> xs;
        xs.reserve(static_cast<size_t>(reps));
        for (int r = 0; r < reps; ++r) {
            Rng stream = base.substream("clt", (static_cast<uint64_t>(n) << 20) + static_cast<uint64_t>(r));
            LabelPath path = n <= kExactLimit ? sample_path(*table, n, stream)
                                              : sample_path_av1423_large(n, stream);
            Permutation sigma = realize_1423_4123(path);
            xs.push_back(static_cast<double>(count_consecutive(pattern, sigma)));
        }
        double mean = 0;
        for (double x : xs) mean += x;
        mean /= reps;
        double var = 0;
        for (double x : xs) var += (x - mean) * (x - mean);
        var /= (reps - 1);
        rows.push_back({n, reps, mean, var});
    }
    return rows;
}

}  // namespace permlab
