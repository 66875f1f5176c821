#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"

namespace permlab {

using bigint = boost::multiprecision::cpp_int;

// Substitution-decomposition tree. Internal nodes carry a +/- decoration (a
// monotone permutation of the node's arity) or a simple permutation of size
// >= 4; leaves are undecorated. No +-+ or --- parent/child pairs.
struct CanonicalTree {
    enum class Dec { Leaf, Plus, Minus, Simple };

    Dec dec = Dec::Leaf;
    Permutation simple;  // set iff dec == Simple
    std::vector<CanonicalTree> children;

    int leaf_count() const {
        if (dec == Dec::Leaf) return 1;
        int s = 0;
        for (const auto& c : children) s += c.leaf_count();
        return s;
    }
    bool operator==(const CanonicalTree&) const = default;

    std::string to_json() const;
    static CanonicalTree from_json(const std::string& text);
};

// Albert-Atkinson decomposition, applied recursively; inverse of compose.
CanonicalTree decompose(const Permutation& nu);
Permutation compose(const CanonicalTree& tree);

// Checks decoration arities, the alternation constraint and simple sizes.
void validate_canonical(const CanonicalTree& tree);

// Number of separable permutations (Av(2413,3142)) of size n, and the number
// of +-indecomposable ones; exact big integers.
bigint separable_count(int n);
bigint separable_plus_indecomposable_count(int n);

// Exactly uniform over Av_n(2413, 3142).
Permutation sample_separable(int n, Rng& rng);

// Uniform big integer in [0, bound).
bigint uniform_bigint_below(const bigint& bound, Rng& rng);

}  // namespace permlab
