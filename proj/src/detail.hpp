#pragma once

// Internal helpers shared by the diagram, tangle and graph code.

#include "qalinks/diagram.hpp"

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qalinks::detail {

struct Dart {
    std::size_t crossing = 0;
    int slot = 0;
    friend bool operator==(const Dart&, const Dart&) = default;
};

inline std::size_t dart_index(Dart d) { return 4 * d.crossing + static_cast<std::size_t>(d.slot); }
inline Dart dart_at(std::size_t i) { return Dart{i / 4, static_cast<int>(i % 4)}; }

// Pairs up the two slots carrying each arc id.  Throws std::invalid_argument
// when an id does not occur exactly twice.
std::vector<std::size_t> partner_table(const std::vector<Crossing>& crossings);

// Face orbits of the rotation system: from a dart follow its arc to the
// partner, then step clockwise.  Dart (x, s) on an orbit stands for the
// corner between slots s - 1 and s of crossing x.
std::vector<std::vector<std::size_t>> face_orbits(const std::vector<Crossing>& crossings,
                                                 const std::vector<std::size_t>& partner);

inline int corner_slot(Corner c) { return (static_cast<int>(c) + 1) % 4; }

// Union-find over arc ids.  The smallest id of a class names the class, so
// gluing a tangle whose ids were shifted above the host's keeps host ids.
class ArcUnion {
public:
    int find(int id);
    void join(int a, int b);

private:
    std::map<int, int> parent_;
};

struct Glued {
    std::vector<Crossing> crossings;
    std::array<int, 4> endpoints{};
    int new_loops = 0;
};

// Applies `joins` to the arc ids of `kept` (and optional tangle endpoints).
// Any class among `involved` with no surviving occurrence has closed up into
// a crossingless circle and is counted in `new_loops`.
Glued glue(std::vector<Crossing> kept, const std::vector<int>& involved,
           const std::vector<std::pair<int, int>>& joins,
           std::optional<std::array<int, 4>> endpoints = std::nullopt);

int max_arc_id(const std::vector<Crossing>& crossings);

std::vector<Crossing> shifted(const std::vector<Crossing>& crossings, int offset);

// Quarter-turn of a frame that keeps the crossing geometrically unchanged.
inline Crossing rotated(const Crossing& c) {
    return Crossing{{c.frame[1], c.frame[2], c.frame[3], c.frame[0]}, flipped(c.over)};
}

// Two-coloring of faces: color[f] is 0 or 1.  Requires a connected diagram.
std::vector<int> face_coloring(const FaceMap& fm);

}  // namespace qalinks::detail
