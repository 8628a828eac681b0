#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "vkh/coloring.hpp"
#include "vkh/diagram.hpp"
#include "vkh/linalg.hpp"
#include "vkh/polynomial.hpp"

namespace vkh {

enum class EdgeKind : std::uint8_t { merge, split, single_cycle };
enum class BuilderKind : std::uint8_t { source_sink, general };

/// Tensor word on the circles of a state: bit c set means X on circle c.
using CircleMask = std::uint32_t;

/// Map attached to the cube edge that changes crossing `bit` from 0 to 1.
///
/// Merge: source circles a, b -> target circle c.  Split: c -> a, b.  A twist
/// flag applies the involution 1 -> 1, X -> -X on that tensor factor; the
/// general builder uses it for strands decorated against the local source-sink
/// reference and for circles whose orientation flips along the edge.
struct CubeEdge {
    StateBits source = 0;
    int bit = 0;
    EdgeKind kind = EdgeKind::single_cycle;
    int sign = 1;
    std::array<int, 2> source_circles{-1, -1};
    std::array<int, 2> target_circles{-1, -1};
    std::array<bool, 2> source_twist{false, false};
    std::array<bool, 2> target_twist{false, false};
    std::vector<int> carry;         ///< source circle -> target circle, -1 if involved
    std::vector<bool> carry_twist;  ///< per source circle

    StateBits target() const { return source | (StateBits{1} << bit); }
    bool twisted() const;
};

struct Cube {
    int n = 0;
    int n_plus = 0;
    int n_minus = 0;
    BuilderKind builder = BuilderKind::source_sink;
    std::vector<Resolution> vertices;  ///< indexed by state bits
    std::vector<CubeEdge> edges;       ///< ascending (source, bit)
    std::vector<int> edge_index;       ///< source * n + bit -> position in edges, -1 if none
    /// General builder: per state and circle, +1 if the circle is oriented along
    /// its canonical traversal.
    std::vector<std::vector<int>> orientation;

    const CubeEdge& edge(StateBits source, int bit) const;
    std::size_t single_cycle_count() const;
};

/// Plain merge/split maps with Bar-Natan signs.  Throws NotColorable,
/// DisconnectedDiagram, and SingleCycleFound (an internal convention bug).
Cube build_cube_source_sink(const Diagram& d, const Coloring& c);
Cube build_cube_source_sink(const Diagram& d);

/// Decorated construction valid for any connected diagram.  Circle orientations
/// come from a breadth-first spanning tree rooted at the all-1 state; edge signs
/// are the solution of the GF(2) system making every square anticommute, with
/// free edges set to their Bar-Natan sign.  Throws DisconnectedDiagram, and
/// InternalInvariant if some square has incompatible composites.
Cube build_cube_general(const Diagram& d);

/// Bar-Natan sign: -1 iff an odd number of 1s precede position bit.
int bar_natan_sign(StateBits state, int bit);

enum class Algebra : std::uint8_t { khovanov, lee };

/// Images of one generator under an edge map, including the edge sign.
void apply_edge(const CubeEdge& e, CircleMask mask, Algebra algebra,
                const std::function<void(CircleMask, int)>& emit);

struct Generator {
    StateBits state;
    CircleMask mask;
};

int homological_degree(const Cube& cube, StateBits state);
int quantum_degree(const Cube& cube, StateBits state, CircleMask mask);

struct BigradedComplex {
    std::map<std::pair<int, int>, std::vector<Generator>> generators;
    /// (i, j) -> (i + 1, j); rows index the target block.
    std::map<std::pair<int, int>, IntMatrix> differentials;
};

BigradedComplex khovanov_complex(const Cube& cube);

/// Throws InternalInvariant if some composite d d is nonzero.
void check_d_squared(const BigradedComplex& c);

/// Total chain group dimension per homological degree.
std::map<int, std::size_t> chain_dimensions(const Cube& cube);

/// Builds the complex, asserts d^2 = 0, and returns the homology dimensions.
KhPolynomial khovanov_homology(const Cube& cube);

/// Colorable inputs use the source-sink builder, others the general one.
KhPolynomial khovanov_polynomial(const Diagram& d);

}  // namespace vkh
