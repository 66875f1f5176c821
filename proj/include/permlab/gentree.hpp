#pragma once

#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"

namespace permlab {

using bigint = boost::multiprecision::cpp_int;

// A colored label of a succession rule; the color tag distinguishes repeated
// child labels (here 'B'/'T' for the two (k+1) children, 0 for unique ones).
struct ColoredLabel {
    int value = 0;
    char color = 0;

    bool operator==(const ColoredLabel&) const = default;
    std::string to_string() const { return std::to_string(value) + (color ? std::string(1, color) : ""); }
};

using LabelPath = std::vector<ColoredLabel>;

// One-dimensional colored succession rule: a root label and, per label value,
// the ordered colored children. Rules are plain data so new families plug in
// without engine changes.
struct SuccessionRule {
    int root = 1;
    std::function<std::vector<ColoredLabel>(int)> children;

    // (k) -> (k+1)^B, (3), (4), ..., (k), (k+1)^T with root (2).
    static SuccessionRule av1423_4123();

    // {"root": r, "children": "builtin:av1423_4123"} or an inline map
    // {"root": r, "children": {"1": [[2,"a"],[1,""]], ...}} (finite support).
    static SuccessionRule from_json(const std::string& text);
};

// c[m][k] = number of consistent colored paths of length m starting at label
// k; level-n total from the root equals the family count at size n.
class CountTable {
public:
    CountTable(const SuccessionRule& rule, int n_max, int label_cap = 0);

    const bigint& count(int length, int label) const;
    const bigint& total(int n) const { return count(n, rule_.root); }
    const SuccessionRule& rule() const { return rule_; }
    int depth() const { return n_max_; }

private:
    SuccessionRule rule_;
    int n_max_;
    int label_cap_;
    std::vector<std::vector<bigint>> c_;  // c_[m][k]
};

// Exactly uniform over consistent colored label paths of length n.
LabelPath sample_path(const CountTable& table, int n, Rng& rng);

// Uniform sampler for the Av(1423,4123) rule at sizes where the exact
// big-integer table is too heavy: scaled double-precision rows with
// checkpointing (per-step weight error is at the 1e-12 level).
LabelPath sample_path_av1423_large(int n, Rng& rng);

// Active-site realizer for Av(1423, 4123): blue children insert at the bottom
// site, tangerine at the top, label (j+1) at the j-th smallest active site.
Permutation realize_1423_4123(const LabelPath& path);

// Active sites by brute force: sites m with sigma^{*m} still in the family.
std::vector<int> active_sites_brute(const Permutation& sigma, const std::vector<Permutation>& avoided);

// Append a new final value at height m (values >= m shift up).
Permutation insert_final(const Permutation& sigma, int m);

struct CltRow {
    int n = 0;
    int reps = 0;
    double mean_cocc = 0.0;  // mean of cocc(pi, sample)
    double var_cocc = 0.0;
};

// Mean/variance of cocc(pi, .) over uniform Av(1423,4123) samples per size;
// switches to the scaled-double sampler above the exact-table range.
std::vector<CltRow> clt_scan(const Permutation& pattern, const std::vector<int>& sizes, int reps,
                             uint64_t seed);

}  // namespace permlab
