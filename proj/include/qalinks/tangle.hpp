#pragma once

#include "qalinks/diagram.hpp"
#include "qalinks/taitgraph.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qalinks {

// A four-ended tangle.  Endpoint arc ids are listed clockwise NW, NE, SE, SW;
// each arc id occurs exactly twice among crossing slots and endpoints.
struct TangleDiagram {
    std::vector<Crossing> crossings;
    std::array<int, 4> endpoints{};
    int free_loops = 0;
    std::optional<std::size_t> marked;

    std::size_t size() const { return crossings.size(); }
    friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;
};

enum class Closure : std::uint8_t { Numerator, Denominator };
enum class Axis : std::uint8_t { Vertical, Horizontal };
enum class TwistType : std::uint8_t { Same, Opposite };
enum class PmVariant : std::uint8_t { Plus, Minus, UpperPlus, UpperMinus };
enum class TypeClass : std::uint8_t { Same, Opposite, NotUniform };

// Throws std::invalid_argument unless arc ids pair up, the tangle closed
// off by its boundary is planar and connected, and the mark is in range.
void validate(const TangleDiagram& t);

// The tangle as a closed diagram with one extra crossing standing for the
// outside of the ball; the extra crossing is the last one.
Diagram with_boundary(const TangleDiagram& t);

// Numerator joins NW-NE and SW-SE; denominator joins NW-SW and NE-SE.
Diagram closure(const TangleDiagram& t, Closure mode);

// One crossing whose Tait edge is positive (+1) or negative (-1) when the
// regions above and below the tangle are shaded.
TangleDiagram crossing_tangle(int sign = 1);

// The crossingless tangle with arcs NW-NE and SW-SE.
TangleDiagram horizontal_arcs();

// `top` above `bottom`.  Tait graphs compose in series.
TangleDiagram stack(const TangleDiagram& top, const TangleDiagram& bottom);

// `left` beside `right`.  Tait graphs compose in parallel.
TangleDiagram row(const TangleDiagram& left, const TangleDiagram& right);

// n half twists relative to an NW-SE over host crossing.
TangleDiagram make_twist_tangle(int n, Axis axis, TwistType type);

bool is_alternating(const TangleDiagram& t);

// Two opposite corners of the crossing lie in one region of the ball.
bool is_nugatory(const TangleDiagram& t, std::size_t c);

bool is_reduced(const TangleDiagram& t);

// Signed graph on the shaded regions, with the regions above and below the
// tangle as u1 and u2.  Edge i comes from crossing i.
SignedPlaneGraph tangle_graph(const TangleDiagram& t);

// Edge signs of the tangle graph against a host crossing of the given type.
TypeClass classify_type(const TangleDiagram& t, Over host = Over::NwSe);

// Adds one crossing of the tangle's own sign: below (Plus), above (Minus),
// right (UpperPlus) or left (UpperMinus).  Requires a reduced tangle whose
// graph signs are uniform.
TangleDiagram make_pm_tangle(const TangleDiagram& t, PmVariant variant);

// t beside one positive crossing: t on the left, or on the right with `bar`.
TangleDiagram make_chi_tangle(const TangleDiagram& t, bool bar);

// Replaces crossing c by t, gluing endpoint NW to the arc in slot NW and so
// on.  Crossings of t follow the remaining crossings of d in order; the
// mark follows t's mark when it has one.
Diagram splice(const Diagram& d, std::size_t c, const TangleDiagram& t);

// Index in splice(d, c, t) of crossing i of t.
inline std::size_t spliced_index(const Diagram& d, std::size_t i) { return d.size() - 1 + i; }

// The (2, n) torus link: the denominator closure of n stacked crossings,
// marked at crossing 0.
Diagram torus_link(int n);

// ---------------------------------------------------------------------------
// The non-alternating family with a distinguished crossing.

enum class OmegaFamily : std::uint8_t {
    BracketQ,       // T_[q]
    UpperP,         // T^p
    LowerQ,         // T_q
    UpperPQ,        // T^{p,q}
    LowerPQ,        // T_{p,q}
    BracketPQInf,   // T^{[p,q]}_inf
    BracketPQ,      // T^{[p,q]}
    BracketPQZero,  // T_0^{[p,q]}
    Prime,          // T'
};

struct OmegaKind {
    OmegaFamily family = OmegaFamily::BracketQ;
    int p = 1;
    int q = 1;

    bool uses_p() const;
    bool uses_q() const;
};

std::string_view omega_name(OmegaFamily f);
std::optional<OmegaFamily> parse_omega_name(std::string_view name);
std::vector<OmegaFamily> omega_families();

// The seven members whose counts are tabulated.
std::vector<OmegaFamily> tabulated_omega_families();

TangleDiagram make_omega(const OmegaKind& kind);

// A plane graph with clockwise edge rotations, turned into the tangle whose
// graph it is.  `host` is an edge joining u1 and u2 that is removed to open
// the tangle; the other edges become crossings in id order.
struct PlaneGraph {
    struct Edge {
        int u = 0;
        int v = 0;
        int sign = 1;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rotation;  // clockwise edge ids per vertex
};

TangleDiagram medial_tangle(const PlaneGraph& g, int host, std::optional<int> marked_edge = std::nullopt);

}  // namespace qalinks
