#pragma once

#include <map>
#include <utility>
#include <vector>

#include "vkh/diagram.hpp"
#include "vkh/khovanov.hpp"
#include "vkh/linalg.hpp"

namespace vkh {

/// Lee deformation d' = d + Phi over all generators, filtered by quantum degree.
struct LeeComplex {
    FilteredComplex complex;  ///< degrees are homological degrees i
    std::vector<std::vector<Generator>> generators;  ///< per degree, aligned with levels
};

/// Needs a source-sink cube (no single cycles, no twists).  Checks (d')^2 = 0,
/// the filtration, and that Phi raises q-degree by exactly 4.
LeeComplex lee_complex(const Cube& cube);

/// Total dimension of Lee homology over all degrees.
std::size_t lee_dimension(const LeeComplex& lee);

struct RasmussenResult {
    int s = 0;
    int s_min = 0;
    int s_max = 0;
    std::size_t lee_dim = 0;
    std::vector<std::pair<int, int>> survivors;  ///< E-infinity bidegrees, with multiplicity
    /// Diagnostic: dim F^j H^i / F^{j+1} H^i keyed by (i, j).
    std::map<std::pair<int, int>, std::size_t> e_infinity;
};

/// Filtered Lee homology of a connected one-component checkerboard diagram.
/// Throws NotAKnot, NotColorable, DisconnectedDiagram.
RasmussenResult rasmussen(const Diagram& d);

/// n - k + 1 with k the circle count of the all-0 state.  Throws NotPositive.
int rasmussen_positive(const Diagram& d);

/// k - n - 1 with k the circle count of the all-1 state.  Throws NotNegative.
int rasmussen_negative(const Diagram& d);

}  // namespace vkh
