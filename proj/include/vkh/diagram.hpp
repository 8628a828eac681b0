#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vkh {

enum class Strand : std::uint8_t { over, under };

struct Visit {
    int label = 0;
    Strand strand = Strand::over;
    int sign = 1;

    bool operator==(const Visit&) const = default;
};

struct VisitRef {
    int component = 0;
    int position = 0;
};

struct Crossing {
    int label = 0;
    int sign = 1;
    VisitRef over;
    VisitRef under;
};

/// Half-edges: edge e of the diagram runs from one visit to the next along its
/// component; 2e is its tail end and 2e+1 its head end.  h ^ 1 is the other end.
using HalfEdge = int;

/// Oriented virtual link diagram given by a signed Gauss code.
///
/// Crossings are indexed in order of first appearance in the code.  Each crossing
/// carries the counterclockwise cyclic order of its four half-edges:
///   sign +1: (under in, over out, under out, over in)
///   sign -1: (under in, over in, under out, over out)
/// The 0-smoothing joins slots (0,1) and (2,3); the 1-smoothing joins (1,2), (3,0).
class Diagram {
public:
    /// The crossing-free unknot.
    Diagram();

    /// Validates and builds the ribbon structure.  Throws Error on bad input.
    static Diagram from_components(std::vector<std::vector<Visit>> components);

    const std::vector<std::vector<Visit>>& components() const { return components_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int n_plus() const { return n_plus_; }
    int n_minus() const { return crossing_count() - n_plus_; }

    /// Index of the crossing with this label; throws unknown_crossing.
    int index_of(int label) const;

    int edge_count() const { return static_cast<int>(edge_first_visit_.size()); }
    int half_edge_count() const { return 2 * edge_count(); }
    /// Components without crossings; each contributes one face and one circle.
    int free_loop_count() const { return free_loops_; }

    const std::array<HalfEdge, 4>& rotation(int crossing) const { return rotation_[crossing]; }
    int crossing_of(HalfEdge h) const { return slot_[h] >> 2; }
    int slot_of(HalfEdge h) const { return slot_[h] & 3; }

    /// Component containing edge e.
    int component_of_edge(int e) const { return edge_component_[e]; }

    /// Partner of h under the smoothing of its crossing (one = 1-smoothing).
    HalfEdge smoothing_partner(HalfEdge h, bool one) const;

    bool operator==(const Diagram& other) const { return components_ == other.components_; }

private:
    void build();

    std::vector<std::vector<Visit>> components_;
    std::vector<Crossing> crossings_;
    std::vector<std::array<HalfEdge, 4>> rotation_;
    std::vector<int> slot_;
    std::vector<int> edge_first_visit_;
    std::vector<int> edge_component_;
    int n_plus_ = 0;
    int free_loops_ = 0;
};

Diagram parse_gauss_code(std::string_view text);

/// Canonical form: components in input order separated by ';', tokens unspaced,
/// crossing-free components written "()".
std::string serialize(const Diagram& d);

/// State α packed into bits: bit m is the smoothing of crossing m.
using StateBits = std::uint64_t;

struct Resolution {
    StateBits state = 0;
    int circle_count = 0;
    /// Circle id of every half-edge (both ends of an edge share a circle).
    std::vector<int> circle_of_half_edge;
};

/// Circles are numbered by their smallest half-edge; free loops come last.
Resolution resolve_state(const Diagram& d, StateBits state);
Resolution resolve_state(const Diagram& d, const std::vector<bool>& alpha);

struct SurfaceData {
    /// Each face is the cyclic sequence of half-edges along its boundary.
    std::vector<std::vector<HalfEdge>> faces;
    std::vector<int> face_of_half_edge;
    int face_count = 0;
    int genus = 0;
};

/// Boundary components of the disk-band surface.  Throws disconnected_diagram.
SurfaceData trace_faces(const Diagram& d);

/// Blocks of component indices linked through shared crossings.
std::vector<std::vector<int>> connected_components(const Diagram& d);

bool is_connected(const Diagram& d);
bool is_alternating(const Diagram& d);

}  // namespace vkh
