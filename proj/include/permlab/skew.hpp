#pragma once

#include <vector>

#include "permlab/bipolar.hpp"
#include "permlab/permuton.hpp"
#include "permlab/rng.hpp"

namespace permlab {

// Discretized skew Brownian permuton simulation. The driver is a discrete
// two-dimensional quadrant excursion of correlation rho; the coalescent flow
// follows +dY above zero and -dX at or below zero. A zero crossing restarts
// from the step's overshoot scale (|dX| upward, |dY| downward) with a fresh
// sign that is + with probability q; both the coin and the landing value are
// shared per time step so that crossing trajectories coalesce, which is what
// the continuum flow's pathwise uniqueness demands.
struct SkewDriveConfig {
    double rho = -0.5;
    double q = 0.5;
    int n = 2000;        // driver steps
    int grid = 0;        // permuton resolution; 0 means n/4
    int rejection_cap = 100000;
    enum class Driver { Auto, LatticeDp, GaussianRejection } driver = Driver::Auto;
};

struct SkewFlow {
    std::vector<double> dx, dy;     // driver increments, 1..n
    std::vector<double> cross_sign; // +-1 coin per step

    int steps() const { return static_cast<int>(dx.size()); }
    // one flow step from value `prev` across increment t (1-based)
    double advance(double prev, int t) const;
    double trajectory_value(int start, int t) const;  // Z^{(start)}_t, 0-based times
};

// The driving excursion: correlated +-1 lattice steps conditioned by an
// exact DP to a quadrant excursion (any rho), or Gaussian bridged increments
// accepted when non-negative (small n only; the acceptance probability decays
// polynomially of degree ~3).
SkewFlow sample_skew_flow(const SkewDriveConfig& cfg, Rng& rng);

// A flow driven by the increments of an explicit walk (used to couple the
// simulator against the exact tandem pipeline on one driver).
SkewFlow skew_flow_from_walk(const Walk2D& walk, double q, Rng& rng);

// The size-m permutation induced by a flow at m evenly spaced grid times.
Permutation skew_flow_permutation(const SkewFlow& flow, int grid);

GridPermuton skew_permuton_simulate(const SkewDriveConfig& cfg, Rng& rng);

// The size-m permutation induced by the flow at the grid times.
Permutation skew_induced_permutation(const SkewDriveConfig& cfg, Rng& rng);

// P(Z_t > 0) at t = horizon/2 for a single trajectory driven by an
// unconditioned Gaussian walk of correlation rho; `reps` independent runs.
double skew_occupation_fraction(double rho, double q, int horizon, int reps, Rng& rng);

}  // namespace permlab
