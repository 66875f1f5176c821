#pragma once

#include <cstdint>
#include <string>

#include "permlab/bipolar.hpp"
#include "permlab/coalescent.hpp"
#include "permlab/rng.hpp"

namespace permlab {

// Plain rejection: run the nu-walk (1/2 tandem step, geometric face steps)
// from (0,0) for n+2 steps, accept quadrant excursions returning to (0,0),
// strip the first and last point. Exactly uniform on W_n.
Walk2D sample_tandem_rejection(int n, Rng& rng, long long try_cap = -1, long long* tries_out = nullptr);

// Conditioned sampling via an exact backward DP over the nu-walk confined to
// the box [0,B]^2 with B = ceil(8 sqrt(n+2)); uniform on box-confined
// excursions (the box is left with probability < e^{-30} at this B).
Walk2D sample_tandem_dp(int n, Rng& rng);

// Rejection below the crossover size, DP beyond.
Walk2D sample_tandem(int n, Rng& rng);

Permutation sample_baxter(int n, Rng& rng);

// log of P(nu-walk of n+2 steps is a quadrant excursion), computed by the
// same DP; equals log(|Baxter_n| * 8^{-(n+2)}).
double log_excursion_probability(int n);

struct DiagramReport {
    long long checked = 0;
    long long mismatches = 0;
    std::string witness;  // json of the first failing walk, if any
    bool ok() const { return mismatches == 0 && checked > 0; }
};

// Verifies bobp(m) = cpbp(wcp(bow(m))) plus the theta/bow roundtrip.
DiagramReport diagram_check_exhaustive(int n);
DiagramReport diagram_check_sampled(int n, int reps, Rng& rng);

// Distinct Baxter permutations reached by the bipolar pipeline at size n.
long long count_baxter_via_pipeline(int n);

}  // namespace permlab
