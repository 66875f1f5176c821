#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permlab/permutation.hpp"
#include "permlab/rng.hpp"

namespace permlab {

struct Frac {
    long long num = 0;
    long long den = 1;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Frac&) const = default;
};

struct GridCell {
    int row = 1;  // x index i, 1-based
    int col = 1;  // y index j, 1-based
    Frac mass;
};

// Discrete permuton at resolution n: an n x n table of cell masses with
// uniform marginals (every row/column sums to 1/n). Stored sparsely.
class GridPermuton {
public:
    GridPermuton(int n, std::vector<GridCell> cells);

    int resolution() const { return n_; }
    const std::vector<GridCell>& cells() const { return cells_; }

    // Mass of (a,b) x (c,d); cell-uniform density inside each cell.
    double rect_mass(double a, double b, double c, double d) const;

    std::string to_json() const;  // {"n": n, "cells": [[i, j, num, den], ...]}
    static GridPermuton from_json(const std::string& text);

private:
    int n_;
    std::vector<GridCell> cells_;
    void validate() const;
};

// mu_sigma: mass 1/n in cell (i, sigma(i)).
GridPermuton permuton_of(const Permutation& sigma);

// mu^z: Lebesgue length measure of total mass 1 on the boundary of the
// rectangle with corners (z,0), (0,z), (1-z,1), (1,1-z); each +-1-slope
// segment S carries mass (1/2) * length of the x-projection.
class RectanglePermuton {
public:
    explicit RectanglePermuton(double z);
    double z() const { return z_; }
    double rect_mass(double a, double b, double c, double d) const;

private:
    double z_;
};

// d_square over the grid-aligned candidate rectangles (merged grids, plus the
// segment endpoint coordinates when a rectangle permuton is involved).
double d_square(const GridPermuton& a, const GridPermuton& b);
double d_square(const GridPermuton& a, const RectanglePermuton& b);
inline double d_square(const RectanglePermuton& a, const GridPermuton& b) { return d_square(b, a); }

// k i.i.d. points from mu, x-reordered: Perm_k(mu).
Permutation sample_induced(const GridPermuton& mu, int k, Rng& rng);
Permutation sample_induced(const RectanglePermuton& mu, int k, Rng& rng);

}  // namespace permlab
