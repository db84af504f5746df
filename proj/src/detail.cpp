#include "detail.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace qalinks::detail {

std::vector<std::size_t> partner_table(const std::vector<Crossing>& crossings) {
    std::unordered_map<int, std::vector<std::size_t>> where;
    for (std::size_t x = 0; x < crossings.size(); ++x)
        for (int s = 0; s < 4; ++s) where[crossings[x].frame[s]].push_back(dart_index({x, s}));

    std::vector<std::size_t> partner(4 * crossings.size());
    for (const auto& [id, darts] : where) {
        if (darts.size() != 2)
            throw std::invalid_argument("arc " + std::to_string(id) + " occurs " +
                                        std::to_string(darts.size()) + " times, expected 2");
        partner[darts[0]] = darts[1];
        partner[darts[1]] = darts[0];
    }
    return partner;
}

std::vector<std::vector<std::size_t>> face_orbits(const std::vector<Crossing>& crossings,
                                                 const std::vector<std::size_t>& partner) {
    const std::size_t n = 4 * crossings.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> orbit;
        for (std::size_t d = start; !seen[d];) {
            seen[d] = true;
            orbit.push_back(d);
            const Dart p = dart_at(partner[d]);
            d = dart_index({p.crossing, (p.slot + 1) % 4});
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

int ArcUnion::find(int id) {
    auto it = parent_.find(id);
    if (it == parent_.end()) return id;
    const int root = find(it->second);
    it->second = root;
    return root;
}

void ArcUnion::join(int a, int b) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) return;
    if (ra < rb)
        parent_[rb] = ra;
    else
        parent_[ra] = rb;
}

Glued glue(std::vector<Crossing> kept, const std::vector<int>& involved,
           const std::vector<std::pair<int, int>>& joins,
           std::optional<std::array<int, 4>> endpoints) {
    ArcUnion classes;
    for (const auto& [a, b] : joins) classes.join(a, b);

    std::set<int> alive;
    for (auto& c : kept)
        for (int& id : c.frame) {
            id = classes.find(id);
            alive.insert(id);
        }
    Glued out;
    if (endpoints) {
        for (int& id : *endpoints) {
            id = classes.find(id);
            alive.insert(id);
        }
        out.endpoints = *endpoints;
    }
    std::set<int> closed;
    for (int id : involved) {
        const int root = classes.find(id);
        if (!alive.contains(root)) closed.insert(root);
    }
    out.crossings = std::move(kept);
    out.new_loops = static_cast<int>(closed.size());
    return out;
}

int max_arc_id(const std::vector<Crossing>& crossings) {
    int m = 0;
    for (const auto& c : crossings)
        for (int id : c.frame) m = std::max(m, id);
    return m;
}

std::vector<Crossing> shifted(const std::vector<Crossing>& crossings, int offset) {
    auto out = crossings;
    for (auto& c : out)
        for (int& id : c.frame) id += offset;
    return out;
}

std::vector<int> face_coloring(const FaceMap& fm) {
    // Parity union-find: N and S corners share a colour, N and E differ.
    std::vector<int> parent(fm.face_count), parity(fm.face_count, 0);
    for (int f = 0; f < fm.face_count; ++f) parent[f] = f;
    auto find = [&](auto&& self, int f) -> std::pair<int, int> {
        if (parent[f] == f) return {f, 0};
        auto [root, p] = self(self, parent[f]);
        parent[f] = root;
        parity[f] ^= p;
        return {root, parity[f]};
    };
    auto relate = [&](int a, int b, int differ) {
        auto [ra, pa] = find(find, a);
        auto [rb, pb] = find(find, b);
        if (ra == rb) {
            if ((pa ^ pb) != differ) throw std::logic_error("face structure is not two-colourable");
            return;
        }
        parent[rb] = ra;
        parity[rb] = pa ^ pb ^ differ;
    };
    for (const auto& corners : fm.corner_face) {
        relate(corners[0], corners[2], 0);
        relate(corners[1], corners[3], 0);
        relate(corners[0], corners[1], 1);
    }
    std::vector<int> color(fm.face_count);
    for (int f = 0; f < fm.face_count; ++f) color[f] = find(find, f).second;
    return color;
}

}  // namespace qalinks::detail
