#include "qalinks/taitgraph.hpp"

#include "detail.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

namespace qalinks {

NugatoryCrossing::NugatoryCrossing(std::size_t c)
    : std::invalid_argument("crossing " + std::to_string(c) + " is nugatory"), crossing(c) {}

DisconnectedDiagram::DisconnectedDiagram() : std::invalid_argument("diagram is not connected") {}

// ---------------------------------------------------------------------------
// Graph surgery

namespace {

// Renames vertex `from` to `into` and closes the gap left by `from`.
SignedPlaneGraph identify(const SignedPlaneGraph& g, int into, int from) {
    if (into == from) return g;
    auto rename = [&](int x) {
        if (x == from) x = into;
        return x > from ? x - 1 : x;
    };
    SignedPlaneGraph out = g;
    out.vertex_count = g.vertex_count - 1;
    for (auto& e : out.edges) {
        e.u = rename(e.u);
        e.v = rename(e.v);
    }
    if (out.boundary_pair) out.boundary_pair = {rename(g.boundary_pair->first), rename(g.boundary_pair->second)};
    return out;
}

}  // namespace

SignedPlaneGraph SignedPlaneGraph::deleted(std::size_t edge) const {
    SignedPlaneGraph out = *this;
    out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(edge));
    if (marked_edge) {
        if (*marked_edge == edge)
            out.marked_edge.reset();
        else if (*marked_edge > edge)
            out.marked_edge = *marked_edge - 1;
    }
    return out;
}

SignedPlaneGraph SignedPlaneGraph::contracted(std::size_t edge) const {
    const auto [u, v] = std::minmax(edges[edge].u, edges[edge].v);
    return identify(deleted(edge), u, v);
}

SignedPlaneGraph SignedPlaneGraph::merged(int a, int b) const {
    const auto [u, v] = std::minmax(a, b);
    return identify(*this, u, v);
}

bool SignedPlaneGraph::is_connected() const {
    if (vertex_count <= 1) return vertex_count == 1;
    std::vector<int> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int groups = vertex_count;
    for (const auto& e : edges) {
        const int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --groups;
        }
    }
    return groups == 1;
}

// ---------------------------------------------------------------------------
// Tree polynomial arithmetic

Integer TreePolynomial::total() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), Integer(0));
}

Integer TreePolynomial::alternating_sum() const {
    Integer s = 0;
    for (std::size_t v = 0; v < coeffs.size(); ++v) s += (v % 2 == 0) ? coeffs[v] : Integer(-coeffs[v]);
    return s;
}

TreePolynomial TreePolynomial::shifted(std::size_t k) const {
    if (coeffs.empty()) return {};
    TreePolynomial out;
    out.coeffs.assign(k, Integer(0));
    out.coeffs.insert(out.coeffs.end(), coeffs.begin(), coeffs.end());
    return out;
}

namespace {

struct PolyRing {
    using Value = std::vector<Integer>;

    static Value zero() { return {}; }
    static Value one() { return {Integer(1)}; }
    static Value variable() { return {Integer(0), Integer(1)}; }

    static void trim(Value& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }
    static Value add(const Value& a, const Value& b) {
        Value out(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
        trim(out);
        return out;
    }
    static Value mul(const Value& a, const Value& b) {
        if (a.empty() || b.empty()) return {};
        Value out(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        trim(out);
        return out;
    }
    static void append_key(std::string& key, const Value& p) {
        key += '[';
        for (const auto& c : p) key += c.str() + ',';
        key += ']';
    }
};

// Evaluation at x = -1: the signed tree sum directly.
struct SignRing {
    using Value = Integer;

    static Value zero() { return 0; }
    static Value one() { return 1; }
    static Value variable() { return -1; }
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static void append_key(std::string& key, const Value& v) { key += v.str() + ','; }
};

// Deletion-contraction over edges carrying a pair of weights: `in` when the
// edge is in the tree and `out` when it is not.  Series and parallel
// reductions keep the branching small on twist regions.
template <class Ring>
class TreeSolver {
public:
    using V = typename Ring::Value;

    struct Edge {
        int u, v;
        V in, out;
    };
    struct Graph {
        int n = 0;
        std::vector<Edge> edges;
    };

    V solve(Graph g) {
        V factor = Ring::one();
        reduce(g, factor);
        if (is_zero(factor)) return Ring::zero();
        if (g.n == 1) return factor;
        const std::string key = canonical_key(g);
        if (auto it = memo_.find(key); it != memo_.end()) return Ring::mul(factor, it->second);

        const std::size_t pick = choose_edge(g);
        const Edge e = g.edges[pick];
        Graph minus = g;
        minus.edges.erase(minus.edges.begin() + static_cast<std::ptrdiff_t>(pick));
        Graph slash = minus;
        merge_vertices(slash, std::min(e.u, e.v), std::max(e.u, e.v));

        V value = Ring::mul(e.in, solve(std::move(slash)));
        if (connected(minus)) value = Ring::add(value, Ring::mul(e.out, solve(std::move(minus))));
        memo_.emplace(key, value);
        return Ring::mul(factor, value);
    }

private:
    std::unordered_map<std::string, V> memo_;

    static bool is_zero(const V& v) { return v == Ring::zero(); }

    static void drop_vertex(Graph& g, int w) {
        for (auto& e : g.edges) {
            if (e.u > w) --e.u;
            if (e.v > w) --e.v;
        }
        --g.n;
    }

    static void merge_vertices(Graph& g, int into, int from) {
        for (auto& e : g.edges) {
            if (e.u == from) e.u = into;
            if (e.v == from) e.v = into;
        }
        drop_vertex(g, from);
    }

    static bool connected(const Graph& g) {
        std::vector<int> parent(g.n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int groups = g.n;
        for (const auto& e : g.edges) {
            const int a = find(e.u), b = find(e.v);
            if (a != b) {
                parent[a] = b;
                --groups;
            }
        }
        return groups == 1;
    }

    static void reduce(Graph& g, V& factor) {
        for (bool changed = true; changed && g.n > 1;) {
            changed = false;

            // Loops never lie in a tree.
            std::vector<Edge> kept;
            for (auto& e : g.edges) {
                if (e.u == e.v)
                    factor = Ring::mul(factor, e.out);
                else
                    kept.push_back(std::move(e));
            }
            g.edges = std::move(kept);

            // Parallel classes collapse to one edge.
            std::map<std::pair<int, int>, std::size_t> first;
            kept.clear();
            for (auto& e : g.edges) {
                const auto key = std::minmax(e.u, e.v);
                if (auto it = first.find(key); it != first.end()) {
                    Edge& p = kept[it->second];
                    p.in = Ring::add(Ring::mul(p.in, e.out), Ring::mul(p.out, e.in));
                    p.out = Ring::mul(p.out, e.out);
                    changed = true;
                } else {
                    first.emplace(key, kept.size());
                    kept.push_back(std::move(e));
                }
            }
            g.edges = std::move(kept);

            std::vector<std::vector<std::size_t>> incident(g.n);
            for (std::size_t i = 0; i < g.edges.size(); ++i) {
                incident[g.edges[i].u].push_back(i);
                incident[g.edges[i].v].push_back(i);
            }
            for (int w = 0; w < g.n; ++w) {
                if (incident[w].empty()) {
                    factor = Ring::zero();
                    return;
                }
                if (incident[w].size() == 1) {
                    // A pendant edge is in every spanning tree.
                    const std::size_t i = incident[w][0];
                    factor = Ring::mul(factor, g.edges[i].in);
                    g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(i));
                    drop_vertex(g, w);
                    changed = true;
                    break;
                }
                if (incident[w].size() == 2) {
                    // Two edges in series: a tree uses both or exactly one.
                    const Edge a = g.edges[incident[w][0]];
                    const Edge b = g.edges[incident[w][1]];
                    const int x = a.u == w ? a.v : a.u;
                    const int y = b.u == w ? b.v : b.u;
                    Edge joined{x, y, Ring::mul(a.in, b.in),
                                Ring::add(Ring::mul(a.in, b.out), Ring::mul(a.out, b.in))};
                    const auto [lo, hi] = std::minmax(incident[w][0], incident[w][1]);
                    g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(hi));
                    g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(lo));
                    g.edges.push_back(std::move(joined));
                    drop_vertex(g, w);
                    changed = true;
                    break;
                }
            }
        }
        if (g.n == 1) {
            for (const auto& e : g.edges) factor = Ring::mul(factor, e.out);
            g.edges.clear();
        }
    }

    static std::size_t choose_edge(const Graph& g) {
        std::vector<int> degree(g.n, 0);
        for (const auto& e : g.edges) {
            ++degree[e.u];
            ++degree[e.v];
        }
        std::size_t best = 0;
        for (std::size_t i = 1; i < g.edges.size(); ++i)
            if (degree[g.edges[i].u] + degree[g.edges[i].v] >
                degree[g.edges[best].u] + degree[g.edges[best].v])
                best = i;
        return best;
    }

    // A full description of the graph under a vertex order obtained by
    // colour refinement.  Equal keys imply isomorphic weighted graphs, so
    // the memo is exact even where the ordering is not canonical.
    static std::string canonical_key(const Graph& g) {
        std::vector<std::string> labels(g.edges.size());
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            Ring::append_key(labels[i], g.edges[i].in);
            labels[i] += '|';
            Ring::append_key(labels[i], g.edges[i].out);
        }
        std::vector<std::string> color(g.n);
        std::vector<int> rank(g.n, 0);
        for (int round = 0; round <= g.n; ++round) {
            std::vector<std::vector<std::string>> around(g.n);
            for (std::size_t i = 0; i < g.edges.size(); ++i) {
                const auto& e = g.edges[i];
                around[e.u].push_back(std::to_string(rank[e.v]) + ':' + labels[i]);
                around[e.v].push_back(std::to_string(rank[e.u]) + ':' + labels[i]);
            }
            for (int w = 0; w < g.n; ++w) {
                std::sort(around[w].begin(), around[w].end());
                color[w] = std::to_string(rank[w]) + '{';
                for (const auto& s : around[w]) color[w] += s + ';';
                color[w] += '}';
            }
            std::vector<std::string> distinct = color;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            std::vector<int> next(g.n);
            for (int w = 0; w < g.n; ++w)
                next[w] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), color[w]) -
                                           distinct.begin());
            const bool stable = next == rank;
            rank = std::move(next);
            if (stable) break;
        }
        std::vector<int> order(g.n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rank[a] < rank[b]; });
        std::vector<int> position(g.n);
        for (int i = 0; i < g.n; ++i) position[order[i]] = i;

        std::vector<std::string> rows;
        rows.reserve(g.edges.size());
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            const auto [a, b] = std::minmax(position[g.edges[i].u], position[g.edges[i].v]);
            rows.push_back(std::to_string(a) + '-' + std::to_string(b) + ':' + labels[i]);
        }
        std::sort(rows.begin(), rows.end());
        std::string key = std::to_string(g.n) + '#';
        for (const auto& r : rows) key += r + ';';
        return key;
    }
};

template <class Ring>
typename Ring::Value solve_graph(const SignedPlaneGraph& g) {
    if (!g.is_connected()) return Ring::zero();
    typename TreeSolver<Ring>::Graph work;
    work.n = g.vertex_count;
    for (const auto& e : g.edges)
        work.edges.push_back({e.u, e.v, e.sign > 0 ? Ring::variable() : Ring::one(), Ring::one()});
    return TreeSolver<Ring>{}.solve(std::move(work));
}

}  // namespace

TreePolynomial tree_polynomial(const SignedPlaneGraph& g) {
    return TreePolynomial{solve_graph<PolyRing>(g)};
}

Integer signed_tree_sum(const SignedPlaneGraph& g) { return solve_graph<SignRing>(g); }

TreePolynomial tree_polynomial_exhaustive(const SignedPlaneGraph& g) {
    if (g.edges.size() > 20) throw std::invalid_argument("exhaustive enumeration is limited to 20 edges");
    if (g.vertex_count < 1 || !g.is_connected()) return {};
    const int need = g.vertex_count - 1;
    std::vector<Integer> counts(static_cast<std::size_t>(need) + 1, Integer(0));
    const std::size_t m = g.edges.size();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) != need) continue;
        std::vector<int> parent(g.vertex_count);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool forest = true;
        int positive = 0;
        for (std::size_t i = 0; i < m && forest; ++i) {
            if (!(mask >> i & 1u)) continue;
            const int a = find(g.edges[i].u), b = find(g.edges[i].v);
            if (a == b) forest = false;
            parent[a] = b;
            positive += g.edges[i].sign > 0;
        }
        if (forest) ++counts[positive];
    }
    PolyRing::trim(counts);
    return TreePolynomial{std::move(counts)};
}

// ---------------------------------------------------------------------------
// Diagrams to graphs

namespace {

// Tait graph whose vertices are the faces of colour `shade`.
SignedPlaneGraph graph_of_class(const Diagram& d, const FaceMap& fm, const std::vector<int>& color, int shade) {
    std::vector<int> vertex(fm.face_count, -1);
    SignedPlaneGraph g;
    for (int f = 0; f < fm.face_count; ++f)
        if (color[f] == shade) vertex[f] = g.vertex_count++;
    for (std::size_t x = 0; x < d.size(); ++x) {
        const bool ns = color[fm.at(x, Corner::N)] == shade;
        const int a = ns ? fm.at(x, Corner::N) : fm.at(x, Corner::W);
        const int b = ns ? fm.at(x, Corner::S) : fm.at(x, Corner::E);
        const bool d0 = d.crossings[x].over == Over::NwSe;
        g.edges.push_back({vertex[a], vertex[b], ns == d0 ? 1 : -1, x});
    }
    return g;
}

}  // namespace

SignedPlaneGraph tait_graph(const Diagram& d, std::optional<std::size_t> normalize_at, Shading shading) {
    if (d.size() == 0) {
        if (!is_connected(d)) throw DisconnectedDiagram();
        return SignedPlaneGraph{1, {}, std::nullopt, std::nullopt};
    }
    if (!is_connected(d)) throw DisconnectedDiagram();
    if (normalize_at && *normalize_at >= d.size()) throw std::out_of_range("crossing index out of range");
    const auto fm = faces(d);
    const auto color = detail::face_coloring(fm);
    int shade = color[fm.at(0, Corner::N)];
    if (shading == Shading::Opposite) shade = 1 - shade;
    if (normalize_at) {
        const std::size_t c = *normalize_at;
        const int north = color[fm.at(c, Corner::N)];
        shade = d.crossings[c].over == Over::NwSe ? north : 1 - north;
    }
    auto g = graph_of_class(d, fm, color, shade);
    g.marked_edge = normalize_at ? normalize_at : d.marked;
    return g;
}

Integer determinant(const Diagram& d, Shading shading) {
    if (d.size() == 0) return d.free_loops == 1 ? 1 : 0;
    if (!is_connected(d)) return 0;
    return abs(signed_tree_sum(tait_graph(d, std::nullopt, shading)));
}

SignedPair signed_pair(const Diagram& d, std::size_t c) {
    if (c >= d.size()) throw std::out_of_range("crossing index out of range");
    if (!is_connected(d)) throw DisconnectedDiagram();
    const auto fm = faces(d);
    const auto color = detail::face_coloring(fm);
    const auto g = graph_of_class(d, fm, color, color[fm.at(c, Corner::N)]);
    const auto& e = g.edges[c];
    const auto minus = g.deleted(c);
    if (e.u == e.v || !minus.is_connected()) throw NugatoryCrossing(c);
    const Integer with = signed_tree_sum(g.contracted(c));
    return SignedPair{e.sign > 0 ? Integer(-with) : with, signed_tree_sum(minus)};
}

std::array<Integer, 8> AlmostTreeCounts::table() const {
    return {trees.at(1),  trees.at(2),  trees_with_edge.at(1),  trees_with_edge.at(2),
            almost.at(1), almost.at(2), almost_with_edge.at(1), almost_with_edge.at(2)};
}

AlmostTreeCounts almost_tree_counts(const SignedPlaneGraph& g, std::size_t edge) {
    if (!g.boundary_pair) throw std::invalid_argument("graph has no boundary vertices u1, u2");
    if (edge >= g.edges.size()) throw std::out_of_range("edge index out of range");
    const auto [u1, u2] = *g.boundary_pair;
    const std::size_t shift = g.edges[edge].sign > 0 ? 1 : 0;
    auto with_edge = [&](const SignedPlaneGraph& h) {
        if (h.edges[edge].u == h.edges[edge].v) return TreePolynomial{};
        return tree_polynomial(h.contracted(edge)).shifted(shift);
    };
    const auto joined = g.merged(u1, u2);
    return AlmostTreeCounts{tree_polynomial(g), with_edge(g), tree_polynomial(joined), with_edge(joined)};
}

// ---------------------------------------------------------------------------
// Goeritz oracle

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Integer goeritz_determinant(const Diagram& d) {
    if (d.size() == 0) return d.free_loops == 1 ? 1 : 0;
    if (!is_connected(d)) return 0;
    const auto fm = faces(d);
    const auto color = detail::face_coloring(fm);
    const int white = 1 - color[fm.at(0, Corner::N)];

    std::map<int, std::size_t> row;
    for (int f = 0; f < fm.face_count; ++f)
        if (color[f] == white) row.emplace(f, row.size());
    std::vector<std::vector<Integer>> goeritz(row.size(), std::vector<Integer>(row.size(), Integer(0)));
    for (std::size_t x = 0; x < d.size(); ++x) {
        const bool ns = color[fm.at(x, Corner::N)] == white;
        const std::size_t i = row.at(ns ? fm.at(x, Corner::N) : fm.at(x, Corner::W));
        const std::size_t j = row.at(ns ? fm.at(x, Corner::S) : fm.at(x, Corner::E));
        const int eta = (ns == (d.crossings[x].over == Over::NwSe)) ? 1 : -1;
        if (i == j) continue;
        goeritz[i][j] -= eta;
        goeritz[j][i] -= eta;
        goeritz[i][i] += eta;
        goeritz[j][j] += eta;
    }
    std::vector<std::vector<Integer>> reduced;
    for (std::size_t i = 1; i < goeritz.size(); ++i)
        reduced.emplace_back(goeritz[i].begin() + 1, goeritz[i].end());
    return abs(bareiss_determinant(std::move(reduced)));
}

}  // namespace qalinks
