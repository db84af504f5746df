#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qalinks {

// Which diagonal of the local frame carries the over-strand.  NwSe is the
// crossing type every construction in this library is written against.
enum class Over : std::uint8_t { NwSe, NeSw };

enum class Smoothing : std::uint8_t { Zero, Infinity };

// Corners of a crossing, clockwise from the top.
enum class Corner : std::uint8_t { N, E, S, W };

inline constexpr Over flipped(Over o) { return o == Over::NwSe ? Over::NeSw : Over::NwSe; }

// Four arc ids in clockwise order NW, NE, SE, SW.  A strand enters at one
// slot and leaves at the opposite one (slot i pairs with slot i + 2).
struct Crossing {
    std::array<int, 4> frame{};
    Over over = Over::NwSe;

    bool is_over_slot(int slot) const { return (slot % 2 == 0) == (over == Over::NwSe); }
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A link diagram as a PD code with per-crossing frames.  Every arc id appears
// in exactly two crossing slots.  Closed circles without crossings are
// counted in `free_loops`.
struct Diagram {
    std::vector<Crossing> crossings;
    int free_loops = 0;
    std::optional<std::size_t> marked;

    static Diagram unknot() { return Diagram{{}, 1, std::nullopt}; }

    std::size_t size() const { return crossings.size(); }
    friend bool operator==(const Diagram&, const Diagram&) = default;
};

// Face incidence of every crossing corner, derived from the rotation system.
struct FaceMap {
    std::vector<std::array<int, 4>> corner_face;  // indexed by Corner
    int face_count = 0;

    int at(std::size_t crossing, Corner c) const {
        return corner_face[crossing][static_cast<std::size_t>(c)];
    }
};

// Throws std::invalid_argument when an arc id does not occur exactly twice
// or a component of the 4-valent graph fails Euler's formula.
void validate(const Diagram& d);

FaceMap faces(const Diagram& d);

// Number of connected pieces of the 4-valent graph (free loops excluded).
int graph_components(const Diagram& d);

int component_count(const Diagram& d);

bool is_connected(const Diagram& d);

// Syntactic alternation: walking any strand, over and under alternate.
bool is_alternating(const Diagram& d);

// A crossing is nugatory when two opposite corners lie in one face.
bool is_nugatory(const Diagram& d, std::size_t c);

Diagram smooth(const Diagram& d, std::size_t c, Smoothing mode);

Diagram crossing_change(const Diagram& d, std::size_t c);

Diagram mirror(const Diagram& d);

// Greedy reduction by nugatory-crossing removal (which subsumes RI kinks)
// and RII bigons.  Determinant and link type are preserved.
Diagram simplify(const Diagram& d);

// Darts (4 * crossing + slot, the smallest on the face) naming triangular
// faces across which one strand can slide, in increasing order.
std::vector<std::size_t> reidemeister_three_sites(const Diagram& d);

// Slides a strand across the triangle named by `site`.
Diagram reidemeister_three(const Diagram& d, std::size_t site);

// Breadth-first search over strand slides, each followed by simplify, for a
// route to the crossingless unknot.  Visits at most `limit` diagrams and never
// lets the crossing number grow.  Returns the sites used.
std::optional<std::vector<std::size_t>> find_unknotting(const Diagram& d, std::size_t limit = 20000);

// Applies simplify, then each slide followed by simplify.
Diagram replay_unknotting(const Diagram& d, const std::vector<std::size_t>& moves);

// Relabels arcs 1..2n in order of first appearance.
Diagram normalized(const Diagram& d);

// Canonical code of the diagram up to relabeling, crossing order and
// frame rotation.  Equal codes mean equal diagrams on the sphere.
std::vector<int> canonical_code(const Diagram& d);

std::string digest(const Diagram& d);

}  // namespace qalinks
