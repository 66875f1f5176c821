#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"

namespace permlab {

using bigint = boost::multiprecision::cpp_int;

// (X, Y, z0): X in {U,D}^n labels columns as maxima/minima, Y in {L,R}^n
// labels rows as left/right records, z0 anchors the position of value 1.
struct AnchoredPair {
    std::string x;  // 'U' / 'D'
    std::string y;  // 'L' / 'R'
    int z0 = 1;

    int size() const { return static_cast<int>(x.size()); }
    bool good() const;

    std::string to_text() const;  // "UDDU.../LRRL.../z0"
    static AnchoredPair from_text(const std::string& text);

    bool operator==(const AnchoredPair&) const = default;
};

struct PetrovReport {
    std::array<bool, 6> condition{};  // conditions 1..6
    bool pass = false;
};

// Raised when the label matchings of rho cannot be completed into a
// permutation (the Petrov conditions exclude this on regular pairs).
struct ConstructionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// phi: records of a square permutation to its anchored pair. Double records
// (diagonal and anti-diagonal points) are labeled D / L.
AnchoredPair project_phi(const Permutation& sigma);

// Petrov conditions 1-6 for one label of a two-letter sequence, evaluated
// with the literal exponents .4/.6/.3.
PetrovReport petrov_check(const std::string& seq, char label);

bool petrov_pair_ok(const AnchoredPair& pair);

// Membership in Omega_n: good, both sequences Petrov, delta <= z0 <= n-delta
// with delta = ceil(n^delta_exp). The literal Petrov thresholds are an
// asymptotic device: at desk-scale n conditions 2-4 essentially never hold,
// so this set is practically empty below astronomically large n.
bool in_omega(const AnchoredPair& pair, double delta_exp = 0.9);

// The operational regularity gate actually used for sampling: good pair,
// anchor in the delta window, the rho matching completes, phi inverts it and
// the output is square. Contains Omega_n.
bool rho_reconstructible(const AnchoredPair& pair, double delta_exp = 0.9);

// rho: matches labels into the four record sequences Lambda_1..Lambda_4 and
// returns the resulting square permutation. check_omega=false skips the
// regularity gate (the matching itself is still validated).
Permutation reconstruct_rho(const AnchoredPair& pair, double delta_exp = 0.9, bool check_omega = true);

// Internals of the rho matching, exposed for the record-partition tests.
struct RhoParts {
    std::vector<Point> lambda1, lambda2, lambda3, lambda4;
    int z1 = 0, z2 = 0, z3 = 0;
};
RhoParts rho_parts(const AnchoredPair& pair);

// Uniform good anchored pairs, rejected until regular, mapped through rho.
AnchoredPair sample_good_pair(int n, Rng& rng);
Permutation sample_square(int n, Rng& rng, double delta_exp = 0.9, int rejection_cap = 10000);

// |Sq(n)| = 2(n+2)4^{n-3} - 4(2n-5) C(2n-6, n-3) for n >= 3.
bigint count_square(int n);
bigint count_square_brute(int n);                    // n <= enumeration cap
bigint count_almost_square(int n, int k);            // |ASq(n,k)|, brute force, n+k <= cap
bigint good_anchored_pair_count(int n);              // 2(n+2)4^{n-3}
bigint good_anchored_pair_count_brute(int n);        // direct enumeration (small n)

}  // namespace permlab
