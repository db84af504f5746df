#include "qalinks/tangle.hpp"

#include "detail.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qalinks {

namespace {

std::vector<int> all_ids(const TangleDiagram& t) {
    std::vector<int> ids(t.endpoints.begin(), t.endpoints.end());
    for (const auto& c : t.crossings) ids.insert(ids.end(), c.frame.begin(), c.frame.end());
    return ids;
}

int max_id(const TangleDiagram& t) {
    const auto ids = all_ids(t);
    return *std::max_element(ids.begin(), ids.end());
}

int min_id(const TangleDiagram& t) {
    const auto ids = all_ids(t);
    return *std::min_element(ids.begin(), ids.end());
}

TangleDiagram shifted(const TangleDiagram& t, int offset) {
    TangleDiagram out = t;
    out.crossings = detail::shifted(t.crossings, offset);
    for (int& id : out.endpoints) id += offset;
    return out;
}

enum Slot { NW = 0, NE = 1, SE = 2, SW = 3 };

enum class Gluing { Stack, Row };

// Places `second`'s arc ids above `first`'s and concatenates crossings.
// The mark of `first` wins; otherwise `second`'s is carried over.
TangleDiagram compose(const TangleDiagram& first, const TangleDiagram& raw_second, Gluing how) {
    const TangleDiagram second = shifted(raw_second, max_id(first) - min_id(raw_second) + 1);
    const auto& a = first.endpoints;
    const auto& b = second.endpoints;
    const bool vertical = how == Gluing::Stack;
    const std::vector<std::pair<int, int>> joins =
        vertical ? std::vector<std::pair<int, int>>{{a[SW], b[NW]}, {a[SE], b[NE]}}
                 : std::vector<std::pair<int, int>>{{a[NE], b[NW]}, {a[SE], b[SW]}};
    const std::array<int, 4> ends =
        vertical ? std::array<int, 4>{a[NW], a[NE], b[SE], b[SW]} : std::array<int, 4>{a[NW], b[NE], b[SE], a[SW]};

    std::vector<Crossing> kept = first.crossings;
    kept.insert(kept.end(), second.crossings.begin(), second.crossings.end());
    std::vector<int> involved;
    for (const auto& [x, y] : joins) {
        involved.push_back(x);
        involved.push_back(y);
    }
    auto glued = detail::glue(std::move(kept), involved, joins, ends);
    TangleDiagram out{std::move(glued.crossings), glued.endpoints,
                      first.free_loops + second.free_loops + glued.new_loops, first.marked};
    if (!out.marked && second.marked) out.marked = first.size() + *second.marked;
    return out;
}

}  // namespace

void validate(const TangleDiagram& t) {
    std::map<int, int> count;
    for (int id : all_ids(t)) ++count[id];
    for (const auto& [id, n] : count)
        if (n != 2)
            throw std::invalid_argument("arc " + std::to_string(id) + " occurs " + std::to_string(n) +
                                        " times, expected 2");
    if (t.marked && *t.marked >= t.size()) throw std::invalid_argument("marked crossing out of range");
    const Diagram closed = with_boundary(t);
    validate(closed);
    if (!is_connected(closed)) throw std::invalid_argument("tangle is not connected");
}

Diagram with_boundary(const TangleDiagram& t) {
    Diagram d{t.crossings, t.free_loops, std::nullopt};
    const auto [nw, ne, se, sw] = t.endpoints;
    d.crossings.push_back(Crossing{{nw, sw, se, ne}, Over::NeSw});
    return d;
}

Diagram closure(const TangleDiagram& t, Closure mode) {
    const auto [nw, ne, se, sw] = t.endpoints;
    const std::vector<std::pair<int, int>> joins =
        mode == Closure::Numerator ? std::vector<std::pair<int, int>>{{nw, ne}, {sw, se}}
                                   : std::vector<std::pair<int, int>>{{nw, sw}, {ne, se}};
    auto glued = detail::glue(t.crossings, {nw, ne, se, sw}, joins);
    return Diagram{std::move(glued.crossings), t.free_loops + glued.new_loops, t.marked};
}

TangleDiagram crossing_tangle(int sign) {
    if (sign > 0) return TangleDiagram{{Crossing{{1, 2, 3, 4}, Over::NwSe}}, {1, 2, 3, 4}, 0, std::nullopt};
    return TangleDiagram{{Crossing{{2, 3, 4, 1}, Over::NwSe}}, {1, 2, 3, 4}, 0, std::nullopt};
}

TangleDiagram horizontal_arcs() { return TangleDiagram{{}, {1, 1, 2, 2}, 0, std::nullopt}; }

TangleDiagram stack(const TangleDiagram& top, const TangleDiagram& bottom) {
    return compose(top, bottom, Gluing::Stack);
}

TangleDiagram row(const TangleDiagram& left, const TangleDiagram& right) {
    return compose(left, right, Gluing::Row);
}

TangleDiagram make_twist_tangle(int n, Axis axis, TwistType type) {
    if (n < 1) throw std::invalid_argument("twist count must be positive");
    const auto unit = crossing_tangle(type == TwistType::Same ? 1 : -1);
    TangleDiagram out = unit;
    for (int i = 1; i < n; ++i) out = axis == Axis::Vertical ? stack(out, unit) : row(out, unit);
    return out;
}

bool is_alternating(const TangleDiagram& t) {
    std::map<int, std::vector<std::pair<std::size_t, int>>> ends;
    for (std::size_t x = 0; x < t.size(); ++x)
        for (int s = 0; s < 4; ++s) ends[t.crossings[x].frame[s]].emplace_back(x, s);
    for (const auto& [id, slots] : ends) {
        if (slots.size() != 2) continue;  // runs to the boundary
        const auto [x, s] = slots[0];
        const auto [y, r] = slots[1];
        if (t.crossings[x].is_over_slot(s) == t.crossings[y].is_over_slot(r)) return false;
    }
    return true;
}

bool is_nugatory(const TangleDiagram& t, std::size_t c) {
    if (c >= t.size()) throw std::out_of_range("crossing index out of range");
    const auto fm = faces(with_boundary(t));
    return fm.at(c, Corner::N) == fm.at(c, Corner::S) || fm.at(c, Corner::E) == fm.at(c, Corner::W);
}

bool is_reduced(const TangleDiagram& t) {
    if (t.size() == 0) return true;
    const auto fm = faces(with_boundary(t));
    for (std::size_t c = 0; c < t.size(); ++c)
        if (fm.at(c, Corner::N) == fm.at(c, Corner::S) || fm.at(c, Corner::E) == fm.at(c, Corner::W))
            return false;
    return true;
}

SignedPlaneGraph tangle_graph(const TangleDiagram& t) {
    const std::size_t boundary = t.size();
    auto g = tait_graph(with_boundary(t), boundary);
    const auto& e = g.edges[boundary];
    const std::pair<int, int> ends{e.u, e.v};
    g = g.deleted(boundary);
    g.boundary_pair = ends;
    g.marked_edge = t.marked;
    return g;
}

TypeClass classify_type(const TangleDiagram& t, Over host) {
    const int host_sign = host == Over::NwSe ? 1 : -1;
    const auto g = tangle_graph(t);
    bool all_same = true, all_opposite = true;
    for (const auto& e : g.edges) {
        all_same = all_same && e.sign == host_sign;
        all_opposite = all_opposite && e.sign == -host_sign;
    }
    if (all_same) return TypeClass::Same;
    if (all_opposite) return TypeClass::Opposite;
    return TypeClass::NotUniform;
}

TangleDiagram make_pm_tangle(const TangleDiagram& t, PmVariant variant) {
    if (t.size() == 0 || !is_reduced(t)) throw std::invalid_argument("tangle must be reduced and non-empty");
    const auto type = classify_type(t);
    if (type == TypeClass::NotUniform) throw std::invalid_argument("tangle graph signs are not uniform");
    const auto x = crossing_tangle(type == TypeClass::Same ? 1 : -1);
    switch (variant) {
        case PmVariant::Plus: return stack(t, x);
        case PmVariant::Minus: return stack(x, t);
        case PmVariant::UpperPlus: return row(t, x);
        case PmVariant::UpperMinus: return row(x, t);
    }
    throw std::logic_error("unknown variant");
}

TangleDiagram make_chi_tangle(const TangleDiagram& t, bool bar) {
    const auto x = crossing_tangle(1);
    return bar ? row(x, t) : row(t, x);
}

Diagram splice(const Diagram& d, std::size_t c, const TangleDiagram& raw) {
    if (c >= d.size()) throw std::out_of_range("crossing index out of range");
    const TangleDiagram t = shifted(raw, detail::max_arc_id(d.crossings) - min_id(raw) + 1);
    std::vector<Crossing> kept;
    for (std::size_t x = 0; x < d.size(); ++x)
        if (x != c) kept.push_back(d.crossings[x]);
    kept.insert(kept.end(), t.crossings.begin(), t.crossings.end());
    const auto& frame = d.crossings[c].frame;
    std::vector<std::pair<int, int>> joins;
    std::vector<int> involved(frame.begin(), frame.end());
    for (int i = 0; i < 4; ++i) {
        joins.emplace_back(frame[i], t.endpoints[i]);
        involved.push_back(t.endpoints[i]);
    }
    auto glued = detail::glue(std::move(kept), involved, joins);
    Diagram out{std::move(glued.crossings), d.free_loops + t.free_loops + glued.new_loops, std::nullopt};
    if (t.marked)
        out.marked = spliced_index(d, *t.marked);
    else if (d.marked && *d.marked != c)
        out.marked = *d.marked > c ? *d.marked - 1 : *d.marked;
    return out;
}

Diagram torus_link(int n) {
    auto d = closure(make_twist_tangle(n, Axis::Vertical, TwistType::Same), Closure::Denominator);
    d.marked = 0;
    return d;
}

// ---------------------------------------------------------------------------
// Medial construction

TangleDiagram medial_tangle(const PlaneGraph& g, int host, std::optional<int> marked_edge) {
    const int m = static_cast<int>(g.edges.size());
    if (host < 0 || host >= m) throw std::invalid_argument("host edge out of range");
    std::vector<std::array<int, 4>> frame(m, {0, 0, 0, 0});
    std::vector<std::array<int, 4>> filled(m, {0, 0, 0, 0});
    int next_id = 1;
    for (int w = 0; w < static_cast<int>(g.rotation.size()); ++w) {
        const auto& rot = g.rotation[w];
        for (std::size_t i = 0; i < rot.size(); ++i) {
            const int e = rot[i];
            const int f = rot[(i + 1) % rot.size()];
            if (g.edges[e].u == g.edges[e].v || g.edges[f].u == g.edges[f].v)
                throw std::invalid_argument("loop edges are not supported");
            // Leaving e clockwise around w, the arc enters f from its
            // counter-clockwise side.
            const int from = g.edges[e].u == w ? NW : SE;
            const int to = g.edges[f].u == w ? NE : SW;
            frame[e][from] = next_id;
            frame[f][to] = next_id;
            ++filled[e][from];
            ++filled[f][to];
            ++next_id;
        }
    }
    for (int e = 0; e < m; ++e)
        for (int s = 0; s < 4; ++s)
            if (filled[e][s] != 1) throw std::invalid_argument("rotation system does not match the edge list");

    TangleDiagram t;
    const auto& h = frame[host];
    t.endpoints = {h[NE], h[NW], h[SW], h[SE]};
    for (int e = 0; e < m; ++e) {
        if (e == host) continue;
        if (marked_edge && e == *marked_edge) t.marked = t.crossings.size();
        const auto& f = frame[e];
        t.crossings.push_back(g.edges[e].sign > 0 ? Crossing{f, Over::NwSe}
                                                  : Crossing{{f[NE], f[SE], f[SW], f[NW]}, Over::NwSe});
    }
    validate(t);
    return t;
}

// ---------------------------------------------------------------------------
// Family members

bool OmegaKind::uses_p() const {
    return family != OmegaFamily::BracketQ && family != OmegaFamily::LowerQ;
}

bool OmegaKind::uses_q() const { return family != OmegaFamily::UpperP && family != OmegaFamily::Prime; }

std::string_view omega_name(OmegaFamily f) {
    switch (f) {
        case OmegaFamily::BracketQ: return "T_bracket_q";
        case OmegaFamily::UpperP: return "T_upper_p";
        case OmegaFamily::LowerQ: return "T_lower_q";
        case OmegaFamily::UpperPQ: return "T_upper_pq";
        case OmegaFamily::LowerPQ: return "T_lower_pq";
        case OmegaFamily::BracketPQInf: return "T_bracket_pq_inf";
        case OmegaFamily::BracketPQ: return "T_bracket_pq";
        case OmegaFamily::BracketPQZero: return "T_zero_pq";
        case OmegaFamily::Prime: return "T_prime";
    }
    return "?";
}

std::vector<OmegaFamily> omega_families() {
    return {OmegaFamily::BracketQ,     OmegaFamily::UpperP,    OmegaFamily::LowerQ,
            OmegaFamily::UpperPQ,      OmegaFamily::LowerPQ,   OmegaFamily::BracketPQInf,
            OmegaFamily::BracketPQ,    OmegaFamily::BracketPQZero, OmegaFamily::Prime};
}

std::vector<OmegaFamily> tabulated_omega_families() {
    auto all = omega_families();
    all.resize(7);
    return all;
}

std::optional<OmegaFamily> parse_omega_name(std::string_view name) {
    for (auto f : omega_families())
        if (omega_name(f) == name) return f;
    return std::nullopt;
}

namespace {

TangleDiagram marked(TangleDiagram t, std::size_t i = 0) {
    t.marked = i;
    return t;
}

// A series path of n negative edges.
TangleDiagram path(int n) { return make_twist_tangle(n, Axis::Vertical, TwistType::Opposite); }

// A bundle of n parallel negative edges.
TangleDiagram bundle(int n) { return make_twist_tangle(n, Axis::Horizontal, TwistType::Opposite); }

TangleDiagram pos() { return crossing_tangle(1); }
TangleDiagram neg() { return crossing_tangle(-1); }

// Builder for graphs with twist regions laid out explicitly.
class GraphBuilder {
public:
    int vertex() {
        rotation_.emplace_back();
        return static_cast<int>(rotation_.size()) - 1;
    }
    int edge(int u, int v, int sign) {
        edges_.push_back({u, v, sign});
        return static_cast<int>(edges_.size()) - 1;
    }
    // n parallel edges u-v in clockwise order at u.
    std::vector<int> bundle(int u, int v, int n, int sign) {
        std::vector<int> ids;
        for (int i = 0; i < n; ++i) ids.push_back(edge(u, v, sign));
        return ids;
    }
    // A path of n edges from u to v through fresh degree-two vertices;
    // returns the edge ids in order from u.
    std::vector<int> path(int u, int v, int n, int sign) {
        std::vector<int> ids;
        int at = u;
        for (int i = 0; i < n; ++i) {
            const int to = i + 1 == n ? v : vertex();
            ids.push_back(edge(at, to, sign));
            if (i > 0) rotation_[at] = {ids[i - 1], ids[i]};
            at = to;
        }
        return ids;
    }
    void around(int w, std::vector<int> clockwise) { rotation_[w] = std::move(clockwise); }

    PlaneGraph graph() const { return PlaneGraph{edges_, rotation_}; }

private:
    std::vector<PlaneGraph::Edge> edges_;
    std::vector<std::vector<int>> rotation_;
};

std::vector<int> reversed(std::vector<int> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// The bridge: u1-a negative, a-u2 a path of q negatives, a-b the chord,
// b-w and w-u2 positive, and a bundle of p negatives reaching b either from
// u1 or from an extra vertex z hanging off u1 (`via_z`).  With `drop_link`
// the edge u1-z is absent.
TangleDiagram bridge(int p, int q, bool via_z, bool drop_link, bool mark_chord) {
    GraphBuilder b;
    const int u1 = b.vertex(), u2 = b.vertex(), a = b.vertex(), bb = b.vertex(), w = b.vertex();
    const int z = via_z ? b.vertex() : -1;
    const int h = b.edge(u1, u2, 1);
    const int ua = b.edge(u1, a, -1);
    const auto ladder = b.path(a, u2, q, -1);
    const int chord = b.edge(a, bb, -1);
    const int bw = b.edge(bb, w, 1);
    const int wu = b.edge(w, u2, 1);
    const int link = via_z && !drop_link ? b.edge(u1, z, -1) : -1;
    const auto fan = b.bundle(via_z ? z : u1, bb, p, -1);

    b.around(a, {ua, chord, ladder.front()});
    b.around(bb, cat({{bw, chord}, reversed(fan)}));
    b.around(w, {bw, wu});
    b.around(u2, {wu, h, ladder.back()});
    if (!via_z) {
        b.around(u1, cat({{h}, fan, {ua}}));
    } else if (drop_link) {
        b.around(u1, {h, ua});
        b.around(z, fan);
    } else {
        b.around(u1, {h, link, ua});
        b.around(z, cat({{link}, fan}));
    }
    const int mark = mark_chord ? chord : (link >= 0 ? link : fan.front());
    return medial_tangle(b.graph(), h, mark);
}

// One negative edge u1-u2 with a bundle of p negatives hanging off u1.
TangleDiagram prime(int p) {
    GraphBuilder b;
    const int u1 = b.vertex(), u2 = b.vertex(), z = b.vertex();
    const int h = b.edge(u1, u2, 1);
    const int f = b.edge(u1, u2, -1);
    const auto fan = b.bundle(u1, z, p, -1);
    b.around(u1, cat({{h}, fan, {f}}));
    b.around(z, reversed(fan));
    b.around(u2, {f, h});
    return medial_tangle(b.graph(), h, fan.front());
}

}  // namespace

TangleDiagram make_omega(const OmegaKind& kind) {
    if ((kind.uses_p() && kind.p < 1) || (kind.uses_q() && kind.q < 1))
        throw std::invalid_argument("twist parameters must be positive");
    const int p = kind.p, q = kind.q;
    switch (kind.family) {
        case OmegaFamily::BracketQ: return row(marked(path(q)), stack(pos(), pos()));
        case OmegaFamily::UpperP: return row(neg(), stack(pos(), stack(marked(pos()), bundle(p))));
        case OmegaFamily::LowerQ: return stack(neg(), row(stack(pos(), pos()), stack(neg(), marked(path(q)))));
        case OmegaFamily::UpperPQ: return row(stack(neg(), marked(path(q))), stack(pos(), stack(pos(), bundle(p))));
        case OmegaFamily::LowerPQ: return stack(row(neg(), marked(bundle(p))), row(path(q), stack(pos(), pos())));
        case OmegaFamily::BracketPQInf: return bridge(p, q, false, false, true);
        case OmegaFamily::BracketPQ: return bridge(p, q, true, false, false);
        case OmegaFamily::BracketPQZero: return bridge(p, q, true, true, false);
        case OmegaFamily::Prime: return prime(p);
    }
    throw std::logic_error("unknown family");
}

}  // namespace qalinks
