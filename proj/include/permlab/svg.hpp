#pragma once

#include <string>

#include "permlab/bipolar.hpp"
#include "permlab/coalescent.hpp"
#include "permlab/permutation.hpp"

namespace permlab {

std::string svg_permutation(const Permutation& sigma);
std::string svg_walk(const Walk2D& walk);
std::string svg_coalescent(const CoalescentWalk& z);

}  // namespace permlab
