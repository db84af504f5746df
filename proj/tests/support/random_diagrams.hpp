#pragma once

#include "qalinks/diagram.hpp"

#include <cstdint>
#include <vector>

namespace qalinks::testing {

// Closure of a braid word on `strands` strands.  Generator +i / -i crosses
// positions i-1 and i (1-based), positive over NW-SE.
Diagram braid_closure(int strands, const std::vector<int>& word);

// `count` connected diagrams of at most `max_crossings` crossings, drawn from
// braid closures in which every generator occurs, with random crossing
// signs and occasional twist-tangle splices.  Deterministic in `seed`.
std::vector<Diagram> random_connected_diagrams(std::size_t count, std::size_t max_crossings, std::uint64_t seed);

}  // namespace qalinks::testing
