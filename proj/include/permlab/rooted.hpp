#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"

namespace permlab {

// A finite permutation with a distinguished index (the root).
struct RootedPermutation {
    Permutation perm;
    int root = 1;

    bool operator==(const RootedPermutation&) const = default;
    auto operator<=>(const RootedPermutation&) const = default;

    std::string to_string() const { return "(" + perm.to_string() + " | " + std::to_string(root) + ")"; }
};

// r_h(sigma, i) = (pat_[a,b](sigma), i-a+1) with a = max(1, i-h), b = min(n, i+h).
RootedPermutation restrict_window(const Permutation& sigma, int i, int h);
RootedPermutation restrict_window(const RootedPermutation& r, int h);

// 2^{-sup{h >= 1 : r_h equal}} with sup(empty) = 0. For finite objects the
// supremum is capped at the largest radius where the restriction still grows;
// hence d(x, x) = 2^{-max(root-1, n-root)} rather than 0.
double local_distance(const RootedPermutation& a, const RootedPermutation& b);

// Exact counts over the n root choices: value[r] / n is the frequency of r.
std::map<RootedPermutation, long long> restriction_histogram(const Permutation& sigma, int h);

// The limiting random total orders on a window [-h, h] with Bernoulli(1/2)
// +/- labels. Av321 moves the "-"-labeled positions first, keeping each block
// increasing; the four square-limit orders additionally reverse one or both
// blocks. SquareMixed draws the order index as J(u, v) from two uniforms.
enum class LimitVariant { Av321, Square1, Square2, Square3, Square4, SquareMixed };

LimitVariant limit_variant_from_string(const std::string& name);

// Applies order j in {1,2,3,4} to the window given its +/- labels
// (labels[p] is the label of position p-h-1... i.e. index 0 <-> -h).
RootedPermutation order_window(const std::vector<bool>& plus_labels, int order_index);

int square_order_index(double u, double v);  // the piecewise map J

RootedPermutation limit_restriction_sampler(LimitVariant variant, int h, Rng& rng);

struct WindowLaw {
    std::map<RootedPermutation, long long> weight;  // numerators
    long long denom = 1;                            // common denominator
};

// Exact law of the sampler by enumeration of all label vectors (and of the
// four orders for the mixed variant; J(U,V) is uniform on {1,2,3,4} by symmetry).
WindowLaw limit_restriction_law(LimitVariant variant, int h);

struct ConcentrationRow {
    std::string family;
    std::string pattern;
    int n = 0;
    int reps = 0;
    double mean = 0.0;
    double variance = 0.0;
    uint64_t seed = 0;
};

using PermSampler = std::function<Permutation(int, Rng&)>;

// Sample mean / variance of cocc_norm(pi, sample) per pattern.
std::vector<ConcentrationRow> concentration_experiment(const std::string& family_name,
                                                       const PermSampler& sampler,
                                                       const std::vector<Permutation>& patterns,
                                                       int n, int reps, uint64_t seed);

std::string concentration_csv(const std::vector<ConcentrationRow>& rows);

}  // namespace permlab
