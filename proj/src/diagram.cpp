#include "qalinks/diagram.hpp"

#include "detail.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qalinks {

using detail::Dart;
using detail::dart_at;
using detail::dart_index;

namespace {

void check_index(const Diagram& d, std::size_t c) {
    if (c >= d.size())
        throw std::out_of_range("crossing index " + std::to_string(c) + " out of range (" +
                                std::to_string(d.size()) + " crossings)");
}

// Connected piece of the 4-valent graph containing each crossing.
std::vector<int> piece_of(const Diagram& d, const std::vector<std::size_t>& partner) {
    std::vector<int> parent(d.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < partner.size(); ++i)
        parent[find(static_cast<int>(i / 4))] = find(static_cast<int>(partner[i] / 4));
    std::map<int, int> label;
    std::vector<int> out(d.size());
    for (std::size_t x = 0; x < d.size(); ++x) {
        const int root = find(static_cast<int>(x));
        out[x] = label.try_emplace(root, static_cast<int>(label.size())).first->second;
    }
    return out;
}

std::optional<std::size_t> shift_mark(std::optional<std::size_t> mark, std::size_t removed) {
    if (!mark || *mark == removed) return std::nullopt;
    return *mark > removed ? *mark - 1 : *mark;
}

// Removes crossings `gone` and joins arc ids along `joins`.
Diagram remove_crossings(const Diagram& d, const std::vector<std::size_t>& gone,
                         const std::vector<std::pair<int, int>>& joins) {
    std::vector<Crossing> kept;
    std::vector<int> involved;
    for (std::size_t x = 0; x < d.size(); ++x) {
        if (std::find(gone.begin(), gone.end(), x) == gone.end())
            kept.push_back(d.crossings[x]);
        else
            involved.insert(involved.end(), d.crossings[x].frame.begin(), d.crossings[x].frame.end());
    }
    auto glued = detail::glue(std::move(kept), involved, joins);
    Diagram out{std::move(glued.crossings), d.free_loops + glued.new_loops, d.marked};
    auto sorted = gone;
    std::sort(sorted.rbegin(), sorted.rend());
    for (std::size_t x : sorted) out.marked = shift_mark(out.marked, x);
    return out;
}

std::optional<std::size_t> find_nugatory(const Diagram& d, const FaceMap& fm) {
    for (std::size_t x = 0; x < d.size(); ++x)
        if (fm.at(x, Corner::N) == fm.at(x, Corner::S) || fm.at(x, Corner::E) == fm.at(x, Corner::W))
            return x;
    return std::nullopt;
}

// Removes a nugatory crossing by the smoothing that keeps its two sides
// joined, which is the untwisting move.
Diagram untwist(const Diagram& d, std::size_t x, const FaceMap& fm) {
    const auto mode = fm.at(x, Corner::N) == fm.at(x, Corner::S) ? Smoothing::Infinity : Smoothing::Zero;
    return smooth(d, x, mode);
}

struct Bigon {
    std::size_t x, y;
    int s, t;  // arc x.s ~ y.t bounds the bigon, followed by y.(t+1) ~ x.(s-1)
};

std::optional<Bigon> find_rii(const Diagram& d, const std::vector<std::size_t>& partner) {
    const auto orbits = detail::face_orbits(d.crossings, partner);
    for (const auto& orbit : orbits) {
        if (orbit.size() != 2) continue;
        const Dart a = dart_at(orbit[0]);
        const Dart b = dart_at(partner[orbit[0]]);
        if (a.crossing == b.crossing) continue;
        if (d.crossings[a.crossing].is_over_slot(a.slot) == d.crossings[b.crossing].is_over_slot(b.slot))
            return Bigon{a.crossing, b.crossing, a.slot, b.slot};
    }
    return std::nullopt;
}

Diagram remove_bigon(const Diagram& d, const Bigon& g) {
    const auto& fx = d.crossings[g.x].frame;
    const auto& fy = d.crossings[g.y].frame;
    auto at = [](const std::array<int, 4>& f, int slot) { return f[(slot % 4 + 4) % 4]; };
    const std::vector<std::pair<int, int>> joins{
        {at(fx, g.s + 2), at(fx, g.s)},         {at(fx, g.s), at(fy, g.t + 2)},
        {at(fx, g.s + 1), at(fx, g.s - 1)},     {at(fx, g.s - 1), at(fy, g.t + 3)},
    };
    return remove_crossings(d, {g.x, g.y}, joins);
}

}  // namespace

void validate(const Diagram& d) {
    if (d.free_loops < 0) throw std::invalid_argument("negative free loop count");
    if (d.marked && *d.marked >= d.size()) throw std::invalid_argument("marked crossing out of range");
    const auto partner = detail::partner_table(d.crossings);
    const auto orbits = detail::face_orbits(d.crossings, partner);
    const auto piece = piece_of(d, partner);
    const int pieces = d.size() == 0 ? 0 : *std::max_element(piece.begin(), piece.end()) + 1;
    std::vector<int> vertices(pieces, 0), face_count(pieces, 0);
    for (std::size_t x = 0; x < d.size(); ++x) ++vertices[piece[x]];
    for (const auto& orbit : orbits) ++face_count[piece[orbit.front() / 4]];
    for (int p = 0; p < pieces; ++p)
        if (face_count[p] != vertices[p] + 2)
            throw std::invalid_argument("rotation system is not planar: a component with " +
                                        std::to_string(vertices[p]) + " crossings has " +
                                        std::to_string(face_count[p]) + " faces");
}

FaceMap faces(const Diagram& d) {
    const auto partner = detail::partner_table(d.crossings);
    const auto orbits = detail::face_orbits(d.crossings, partner);
    FaceMap fm;
    fm.corner_face.assign(d.size(), {});
    fm.face_count = static_cast<int>(orbits.size());
    std::vector<int> face_of_dart(partner.size());
    for (std::size_t f = 0; f < orbits.size(); ++f)
        for (std::size_t dart : orbits[f]) face_of_dart[dart] = static_cast<int>(f);
    for (std::size_t x = 0; x < d.size(); ++x)
        for (int c = 0; c < 4; ++c)
            fm.corner_face[x][c] = face_of_dart[dart_index({x, detail::corner_slot(Corner(c))})];
    return fm;
}

int graph_components(const Diagram& d) {
    if (d.size() == 0) return 0;
    const auto piece = piece_of(d, detail::partner_table(d.crossings));
    return *std::max_element(piece.begin(), piece.end()) + 1;
}

int component_count(const Diagram& d) {
    const auto partner = detail::partner_table(d.crossings);
    std::vector<bool> seen(partner.size(), false);
    int strands = 0;
    for (std::size_t start = 0; start < partner.size(); ++start) {
        if (seen[start]) continue;
        ++strands;
        for (std::size_t cur = start; !seen[cur];) {
            seen[cur] = true;
            const Dart dt = dart_at(cur);
            const std::size_t across = dart_index({dt.crossing, (dt.slot + 2) % 4});
            seen[across] = true;
            cur = partner[across];
        }
    }
    return strands + d.free_loops;
}

bool is_connected(const Diagram& d) {
    if (d.size() == 0) return d.free_loops == 1;
    return d.free_loops == 0 && graph_components(d) == 1;
}

bool is_alternating(const Diagram& d) {
    const auto partner = detail::partner_table(d.crossings);
    for (std::size_t i = 0; i < partner.size(); ++i) {
        const Dart a = dart_at(i);
        const Dart b = dart_at(partner[i]);
        if (d.crossings[a.crossing].is_over_slot(a.slot) == d.crossings[b.crossing].is_over_slot(b.slot))
            return false;
    }
    return true;
}

bool is_nugatory(const Diagram& d, std::size_t c) {
    check_index(d, c);
    const auto fm = faces(d);
    return fm.at(c, Corner::N) == fm.at(c, Corner::S) || fm.at(c, Corner::E) == fm.at(c, Corner::W);
}

Diagram smooth(const Diagram& d, std::size_t c, Smoothing mode) {
    check_index(d, c);
    const auto [nw, ne, se, sw] = d.crossings[c].frame;
    if (mode == Smoothing::Zero) return remove_crossings(d, {c}, {{nw, sw}, {ne, se}});
    return remove_crossings(d, {c}, {{nw, ne}, {sw, se}});
}

Diagram crossing_change(const Diagram& d, std::size_t c) {
    check_index(d, c);
    Diagram out = d;
    out.crossings[c].over = flipped(out.crossings[c].over);
    return out;
}

Diagram mirror(const Diagram& d) {
    Diagram out = d;
    for (auto& x : out.crossings) x.over = flipped(x.over);
    return out;
}

Diagram simplify(const Diagram& d) {
    Diagram cur = d;
    for (;;) {
        if (cur.size() == 0) return cur;
        const auto fm = faces(cur);
        if (auto x = find_nugatory(cur, fm)) {
            cur = untwist(cur, *x, fm);
            continue;
        }
        if (auto g = find_rii(cur, detail::partner_table(cur.crossings))) {
            cur = remove_bigon(cur, *g);
            continue;
        }
        return cur;
    }
}

namespace {

// The three darts of a triangular face with distinct crossings, or nothing.
std::optional<std::array<Dart, 3>> triangle_at(const std::vector<std::size_t>& partner, std::size_t dart) {
    std::array<Dart, 3> out;
    std::size_t cur = dart;
    for (int i = 0; i < 3; ++i) {
        out[i] = dart_at(cur);
        const Dart p = dart_at(partner[cur]);
        cur = dart_index(Dart{p.crossing, (p.slot + 1) % 4});
    }
    if (cur != dart) return std::nullopt;
    if (out[0].crossing == out[1].crossing || out[1].crossing == out[2].crossing ||
        out[0].crossing == out[2].crossing)
        return std::nullopt;
    return out;
}

// Each side of the triangle lies on a strand crossing the other two.  The
// move is possible unless every strand is over exactly once.
bool slidable(const Diagram& d, const std::array<Dart, 3>& t) {
    for (int i = 0; i < 3; ++i) {
        const Dart a = t[i];
        const Dart b = t[(i + 1) % 3];
        const int overs = int(d.crossings[a.crossing].is_over_slot(a.slot)) +
                          int(d.crossings[b.crossing].is_over_slot(b.slot + 3));
        if (overs == 2) return true;
    }
    return false;
}

}  // namespace

std::vector<std::size_t> reidemeister_three_sites(const Diagram& d) {
    std::vector<std::size_t> out;
    if (d.size() < 3) return out;
    const auto partner = detail::partner_table(d.crossings);
    for (const auto& orbit : detail::face_orbits(d.crossings, partner)) {
        if (orbit.size() != 3) continue;
        const std::size_t first = *std::min_element(orbit.begin(), orbit.end());
        if (auto t = triangle_at(partner, first); t && slidable(d, *t)) out.push_back(first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Diagram reidemeister_three(const Diagram& d, std::size_t site) {
    if (site >= 4 * d.size()) throw std::out_of_range("no such dart");
    const auto partner = detail::partner_table(d.crossings);
    const auto t = triangle_at(partner, site);
    if (!t || !slidable(d, *t)) throw std::invalid_argument("dart does not bound a slidable triangle");
    // Sliding a strand across the triangle is a half turn of the disk around
    // it: every strand keeps its crossings but meets them in reverse order, so
    // the two outer ends of each strand trade places.
    Diagram out = d;
    for (int i = 0; i < 3; ++i) {
        const Dart a = t->at(i);
        const Dart b = t->at((i + 1) % 3);
        const int a_slot = (a.slot + 2) % 4;
        const int b_slot = (b.slot + 1) % 4;
        out.crossings[a.crossing].frame[a_slot] = d.crossings[b.crossing].frame[b_slot];
        out.crossings[b.crossing].frame[b_slot] = d.crossings[a.crossing].frame[a_slot];
    }
    return out;
}

std::optional<std::vector<std::size_t>> find_unknotting(const Diagram& d, std::size_t limit) {
    const Diagram start = simplify(d);
    const auto done = [](const Diagram& x) { return x.size() == 0 && x.free_loops == 1; };
    if (done(start)) return std::vector<std::size_t>{};
    if (component_count(start) != 1) return std::nullopt;
    struct State {
        Diagram diagram;
        std::vector<std::size_t> moves;
    };
    std::set<std::vector<int>> seen{canonical_code(start)};
    std::deque<State> queue{{start, {}}};
    while (!queue.empty() && seen.size() <= limit) {
        State cur = std::move(queue.front());
        queue.pop_front();
        for (std::size_t site : reidemeister_three_sites(cur.diagram)) {
            Diagram next = simplify(reidemeister_three(cur.diagram, site));
            auto moves = cur.moves;
            moves.push_back(site);
            if (done(next)) return moves;
            if (next.size() > cur.diagram.size()) continue;
            if (seen.insert(canonical_code(next)).second) queue.push_back({std::move(next), std::move(moves)});
        }
    }
    return std::nullopt;
}

Diagram replay_unknotting(const Diagram& d, const std::vector<std::size_t>& moves) {
    Diagram cur = simplify(d);
    for (std::size_t site : moves) cur = simplify(reidemeister_three(cur, site));
    return cur;
}

Diagram normalized(const Diagram& d) {
    std::map<int, int> relabel;
    Diagram out = d;
    for (auto& x : out.crossings)
        for (int& id : x.frame) id = relabel.try_emplace(id, static_cast<int>(relabel.size()) + 1).first->second;
    return out;
}

namespace {

// BFS code of one connected piece from a given start dart.  Each crossing
// is read in the rotation it was entered by, so the code does not depend on
// labels, crossing order or frame rotation.
std::vector<int> piece_code(const Diagram& d, const std::vector<std::size_t>& partner, std::size_t start,
                            int start_rot, std::size_t piece_size) {
    std::vector<int> index(d.size(), -1), rot(d.size(), 0);
    std::vector<std::size_t> order;
    order.reserve(piece_size);
    index[start] = 0;
    rot[start] = start_rot;
    order.push_back(start);
    std::vector<int> code;
    code.reserve(piece_size * 9);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::size_t x = order[i];
        code.push_back(d.crossings[x].is_over_slot(rot[x]) ? 1 : 0);
        for (int k = 0; k < 4; ++k) {
            const Dart p = dart_at(partner[dart_index({x, (rot[x] + k) % 4})]);
            if (index[p.crossing] < 0) {
                index[p.crossing] = static_cast<int>(order.size());
                rot[p.crossing] = p.slot;
                order.push_back(p.crossing);
            }
            code.push_back(index[p.crossing]);
            code.push_back((p.slot - rot[p.crossing] + 4) % 4);
        }
    }
    return code;
}

}  // namespace

std::vector<int> canonical_code(const Diagram& d) {
    const auto partner = detail::partner_table(d.crossings);
    const auto piece = piece_of(d, partner);
    const int pieces = d.size() == 0 ? 0 : *std::max_element(piece.begin(), piece.end()) + 1;
    std::vector<std::vector<std::size_t>> members(pieces);
    for (std::size_t x = 0; x < d.size(); ++x) members[piece[x]].push_back(x);

    std::vector<std::vector<int>> codes;
    for (const auto& m : members) {
        std::vector<int> best;
        for (std::size_t x : m)
            for (int r = 0; r < 4; ++r) {
                auto code = piece_code(d, partner, x, r, m.size());
                if (best.empty() || code < best) best = std::move(code);
            }
        codes.push_back(std::move(best));
    }
    std::sort(codes.begin(), codes.end());
    std::vector<int> out{d.free_loops, pieces};
    for (const auto& c : codes) {
        out.push_back(static_cast<int>(c.size()));
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

std::string digest(const Diagram& d) {
    std::uint64_t h = 1469598103934665603ULL;
    for (int v : canonical_code(d)) {
        h ^= static_cast<std::uint32_t>(v);
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace qalinks
