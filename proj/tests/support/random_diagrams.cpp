#include "support/random_diagrams.hpp"

#include "qalinks/tangle.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace qalinks::testing {

Diagram braid_closure(int strands, const std::vector<int>& word) {
    std::vector<int> top(strands);
    for (int i = 0; i < strands; ++i) top[i] = i;
    std::vector<int> current = top;
    int next_id = strands;
    Diagram d;
    for (int g : word) {
        const int i = std::abs(g) - 1;
        if (i < 0 || i + 1 >= strands) throw std::invalid_argument("generator out of range");
        const int se = next_id++;
        const int sw = next_id++;
        d.crossings.push_back({{current[i], current[i + 1], se, sw}, g > 0 ? Over::NwSe : Over::NeSw});
        current[i] = sw;
        current[i + 1] = se;
    }
    // close the braid: the bottom arc at each position is the top arc there
    for (auto& x : d.crossings)
        for (auto& id : x.frame)
            for (int pos = 0; pos < strands; ++pos)
                if (id == current[pos] && current[pos] != top[pos]) id = top[pos];
    for (int pos = 0; pos < strands; ++pos)
        if (current[pos] == top[pos]) ++d.free_loops;
    validate(d);
    return d;
}

std::vector<Diagram> random_connected_diagrams(std::size_t count, std::size_t max_crossings, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Diagram> out;
    while (out.size() < count) {
        const int strands = std::uniform_int_distribution<int>(2, 5)(rng);
        const std::size_t gens = static_cast<std::size_t>(strands - 1);
        const std::size_t length = std::uniform_int_distribution<std::size_t>(std::max<std::size_t>(gens, 2),
                                                                               max_crossings)(rng);
        std::vector<int> word;
        for (std::size_t k = 0; k < length; ++k) {
            const int g = k < gens ? int(k) + 1 : std::uniform_int_distribution<int>(1, int(gens))(rng);
            word.push_back(std::bernoulli_distribution(0.5)(rng) ? g : -g);
        }
        std::shuffle(word.begin(), word.end(), rng);
        Diagram d = braid_closure(strands, word);
        if (d.size() + 2 <= max_crossings && std::bernoulli_distribution(0.3)(rng)) {
            const std::size_t c = std::uniform_int_distribution<std::size_t>(0, d.size() - 1)(rng);
            if (d.crossings[c].over == Over::NwSe) {
                const auto axis = std::bernoulli_distribution(0.5)(rng) ? Axis::Vertical : Axis::Horizontal;
                const auto type = std::bernoulli_distribution(0.5)(rng) ? TwistType::Same : TwistType::Opposite;
                d = splice(d, c, make_twist_tangle(3, axis, type));
            }
        }
        if (!is_connected(d)) continue;
        d.marked.reset();
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace qalinks::testing
