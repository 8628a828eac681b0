#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vkh/diagram.hpp"

namespace vkh {

enum class Color : std::uint8_t { white, black };

/// Checkerboard coloring of the faces of the supporting surface.
struct Coloring {
    std::vector<Color> color;      ///< per face id
    std::vector<int> white_faces;  ///< ascending face id, i.e. by smallest half-edge
    std::vector<int> eta;          ///< incidence number per crossing, +1 or -1
    StateBits boundary_state = 0;  ///< 1-smoothing exactly where eta = -1
    bool is_dual = false;          ///< colors swapped relative to the normalized one
};

/// Normalized coloring: the face on the left of the first arc of the first
/// component (the face of half-edge 0) is white.  nullopt if not colorable.
///
/// eta(c) = +1 iff the corner between slots 0 and 1 of c is white.
std::optional<Coloring> find_checkerboard_coloring(const Diagram& d, const SurfaceData& s);

/// Colors swapped, eta negated, boundary states exchanged.
Coloring dual(const Coloring& c, const Diagram& d);

using SymMatrix = std::vector<std::vector<long long>>;

struct GoeritzData {
    SymMatrix pre_goeritz;  ///< over all white faces, rows sum to zero
    SymMatrix goeritz;      ///< first white face deleted
    int mu = 0;
    int sigma = 0;
    std::vector<int> type;  ///< 1 or 2 per crossing; type II iff sign * eta = 1
};

GoeritzData goeritz(const Diagram& d, const SurfaceData& s, const Coloring& c);

/// (sigma for c, sigma for its dual).
std::pair<int, int> signature_pair(const Diagram& d, const SurfaceData& s, const Coloring& c);

/// The pair as (min, max).
std::pair<int, int> normalized_pair(std::pair<int, int> p);

/// Exact signature by rational congruence diagonalization.  Throws NotSymmetric.
int symmetric_signature(const SymMatrix& m);

/// (s_boundary, its complement).  Checks that their circles are exactly the faces.
std::pair<Resolution, Resolution> boundary_states(const Diagram& d, const SurfaceData& s, const Coloring& c);

}  // namespace vkh
