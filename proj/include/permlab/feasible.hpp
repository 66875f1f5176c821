#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permlab/permutation.hpp"

namespace permlab {

using rational = boost::multiprecision::cpp_rational;

// The overlap graph Ov(k): one vertex per pattern of S_{k-1}, one edge per
// pattern pi of S_k from pat(first k-1 entries) to pat(last k-1 entries).
struct OverlapGraph {
    int k = 0;
    std::vector<Permutation> vertices;  // S_{k-1} in lexicographic order
    struct Edge {
        int from = 0, to = 0;
        Permutation label;
        int label_index = 0;  // lexicographic index of the label in S_k
    };
    std::vector<Edge> edges;  // k! edges, by label_index
};

OverlapGraph build_overlap_graph(int k);  // 2 <= k <= 5

// All vertex-simple directed cycles, each an ordered list of edge indices,
// rotated to start at the cycle's smallest vertex. Throws when the count
// passes the ceiling (k = 5 territory).
std::vector<std::vector<int>> simple_cycles(const OverlapGraph& g, long long ceiling = 2000000);

// e_C: coordinate 1/|C| on the cycle's edge labels, indexed by S_k lex order.
std::vector<rational> cycle_vertex(const OverlapGraph& g, const std::vector<int>& cycle);

// Affine dimension of conv{e_C} by exact rational Gaussian elimination.
int polytope_dimension(int k);

// Exact-rational feasibility: is v within L-infinity distance eps of
// conv{e_C}? Phase-1 simplex with Bland's rule.
bool membership(const std::vector<rational>& v, int k, const rational& eps);

// (cocc(pi, sigma))_{pi in S_k lex order}; denominator n or n-k+1.
enum class CoccNorm { OverN, OverWindows };
std::vector<rational> cocc_vector(const Permutation& sigma, int k, CoccNorm norm);

// CSV export: cycle id, then one num/den pair per S_k coordinate.
std::string polytope_csv(const OverlapGraph& g, const std::vector<std::vector<int>>& cycles);

}  // namespace permlab
