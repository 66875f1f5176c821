#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace permlab {

// A permutation of [n] in one-line notation. The empty permutation (n = 0) is
// a valid value; substitution-decomposition recursion bottoms out on it.
// Values are immutable after construction.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);
    static Permutation decreasing(int n);

    // Parses "2 4 1 3" (space separated) or "2413" (compact digits, n <= 9).
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(vals_.size()); }
    bool empty() const { return vals_.empty(); }

    // 1-based application: sigma(i).
    int operator()(int i) const { return vals_[static_cast<size_t>(i) - 1]; }

    const std::vector<int>& values() const { return vals_; }

    Permutation inverse() const;
    Permutation reverse() const;     // diagram mirrored left-right
    Permutation complement() const;  // diagram mirrored top-bottom

    // Diagram rotated clockwise by pi/2: sigma*(sigma(i)) = n+1-i.
    Permutation rotate_cw() const;

    std::string to_string() const;  // space separated one-line form
    std::string to_json() const;    // {"n": n, "values": [...]}

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> vals_;
    struct unchecked_t {};
    Permutation(std::vector<int> values, unchecked_t) : vals_(std::move(values)) {}
    friend Permutation standardize_ints(const std::vector<int>&);
    friend Permutation pattern_at(const Permutation&, const std::vector<int>&);
};

struct Point {
    int pos;
    int val;
    bool operator==(const Point&) const = default;
    auto operator<=>(const Point&) const = default;
};

struct RecordSets {
    std::vector<Point> lr_max, lr_min, rl_max, rl_min;
};

struct PatternCounts {
    unsigned long long occ = 0;   // occurrences over arbitrary index sets
    unsigned long long cocc = 0;  // occurrences over interval index sets
    double pocc = 0.0;            // occ / C(n,k)
    double cocc_norm = 0.0;       // cocc / n  (denominator-n convention)
};

// std(x_1...x_m): the permutation in the same relative order as the input.
// Throws std::invalid_argument on tied entries.
Permutation standardize(const std::vector<double>& seq);
Permutation standardize_ints(const std::vector<int>& seq);

// pat_I(sigma) for a strictly increasing 1-based index set I.
Permutation pattern_at(const Permutation& sigma, const std::vector<int>& index_set);

// occ / pocc / cocc / cocc_norm of pi in sigma. For |pi| > |sigma| all counts
// are 0; the empty pattern has occ = cocc = 1 by convention.
PatternCounts pattern_counts(const Permutation& pi, const Permutation& sigma);

unsigned long long count_occurrences(const Permutation& pi, const Permutation& sigma);
unsigned long long count_consecutive(const Permutation& pi, const Permutation& sigma);

// First occurrence of pi in sigma as an index set, if any.
std::optional<std::vector<int>> find_occurrence(const Permutation& pi, const Permutation& sigma);

bool avoids(const Permutation& sigma, const Permutation& pattern);
bool avoids_all(const Permutation& sigma, const std::vector<Permutation>& patterns);

RecordSets records(const Permutation& sigma);
std::vector<Point> internal_points(const Permutation& sigma);
bool is_square(const Permutation& sigma);

Permutation direct_sum(const Permutation& tau, const Permutation& sigma);
Permutation skew_sum(const Permutation& tau, const Permutation& sigma);

// theta[nu_1, ..., nu_d]; requires d = |theta| and every nu_i nonempty.
Permutation substitute(const Permutation& theta, const std::vector<Permutation>& blocks);

bool is_sum_decomposable(const Permutation& sigma);
bool is_skew_decomposable(const Permutation& sigma);

// Simple: size > 2 and no interval of length in [2, n-1] maps onto an interval.
bool is_simple(const Permutation& sigma);

// Baxter: no i<j<k with sigma(j+1) < sigma(i) < sigma(k) < sigma(j)
// and none with sigma(j) < sigma(k) < sigma(i) < sigma(j+1).
bool is_baxter(const Permutation& sigma);

// All sigma in S_n satisfying pred, in lexicographic order. The cap guards
// against accidental huge enumerations; PERMLAB_CAP overrides the default.
std::vector<Permutation> enumerate_class(int n, const std::function<bool(const Permutation&)>& pred);

int enumeration_cap();

unsigned long long binomial(int n, int k);
unsigned long long catalan(int n);

}  // namespace permlab
