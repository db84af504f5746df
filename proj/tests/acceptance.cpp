// Acceptance run: one PASS/FAIL line per criterion.  Exits nonzero only when
// a criterion fails in a way that is not explained by a known deviation.

#include "qalinks/catalog.hpp"
#include "qalinks/construct.hpp"
#include "qalinks/reproduce.hpp"
#include "qalinks/taitgraph.hpp"
#include "qalinks/tangle.hpp"

#include "support/oracles.hpp"
#include "support/random_diagrams.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <ranges>
#include <sstream>
#include <string>
#include <vector>

using namespace qalinks;

namespace {

struct Result {
    std::vector<std::string> failures;
    std::vector<std::string> info;
    // Set when every failure is an expected one.
    std::string known;

    void fail(std::string what) { failures.push_back(std::move(what)); }
    template <class A, class B>
    void expect_eq(const A& expected, const B& computed, const std::string& what) {
        if (!(expected == computed)) {
            std::ostringstream s;
            s << what << ": expected " << expected << ", computed " << computed;
            fail(s.str());
        }
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
};

std::string text(const OmegaKind& k) {
    std::ostringstream s;
    s << omega_name(k.family);
    if (k.uses_p()) s << " p=" << k.p;
    if (k.uses_q()) s << " q=" << k.q;
    return s.str();
}

std::vector<OmegaKind> tabulated_kinds() {
    std::vector<OmegaKind> out;
    for (auto f : tabulated_omega_families())
        for (int p = 1; p <= 3; ++p)
            for (int q = 1; q <= 3; ++q) {
                const OmegaKind k{f, p, q};
                if ((!k.uses_p() && p != 1) || (!k.uses_q() && q != 1)) continue;
                out.push_back(k);
            }
    return out;
}

const Diagram& seed(const std::string& name) {
    static std::map<std::string, Diagram> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, catalog_entry(name).diagram).first;
    return it->second;
}

std::size_t mark(const Diagram& d) { return *d.marked; }

Integer det_of_smoothing(const Diagram& d, std::size_t c, Smoothing s) { return determinant(smooth(d, c, s)); }

// ---------------------------------------------------------------------------

Result determinant_reproduction() {
    Result r;
    const auto check = [&](const std::string& name, long whole, long zero, long infinity) {
        const auto& d = seed(name);
        r.expect_eq(whole, determinant(d), name + " det");
        r.expect_eq(zero, det_of_smoothing(d, mark(d), Smoothing::Zero), name + " det(L_0)");
        r.expect_eq(infinity, det_of_smoothing(d, mark(d), Smoothing::Infinity), name + " det(L_inf)");
    };
    check("torus_2_8", 8, 7, 1);
    check("k8_21", 15, 13, 2);
    check("k9_43_switch", 15, 1, 14);
    check("k9_44", 17, 2, 15);
    r.expect_eq(1, determinant(seed("k9_44_minus7bar")), "k9_44_minus7bar det");
    return r;
}

Result oracle_equivalence() {
    Result r;
    std::vector<std::pair<std::string, Diagram>> cases;
    for (const auto& e : load_catalog()) cases.emplace_back(e.name, e.diagram);
    const auto random = testing::random_connected_diagrams(240, 12, 20241015);
    for (std::size_t i = 0; i < random.size(); ++i) cases.emplace_back("random #" + std::to_string(i), random[i]);
    for (const auto& [name, d] : cases) {
        const Integer tree = determinant(d);
        r.expect_eq(tree, goeritz_determinant(d), name + " Goeritz");
        r.expect_eq(tree, testing::coloring_determinant(d), name + " coloring");
    }
    r.info.push_back(std::to_string(cases.size()) + " diagrams");
    return r;
}

// Brute-force spanning and almost spanning tree counts of a tangle graph.
std::array<Integer, 8> enumerated_counts(const SignedPlaneGraph& g, std::size_t marked) {
    const int n = g.vertex_count;
    const auto [u1, u2] = *g.boundary_pair;
    std::array<Integer, 8> out{};
    std::vector<int> parent(n);
    std::vector<std::size_t> chosen;
    const auto find = [&](int v) {
        while (parent[v] != v) v = parent[v];
        return v;
    };
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t next, std::size_t need) {
        if (need == 0) {
            int positive = 0;
            bool with_marked = false;
            for (auto e : chosen) {
                positive += g.edges[e].sign > 0;
                with_marked = with_marked || e == marked;
            }
            if (positive < 1 || positive > 2) return;
            const bool tree = static_cast<int>(chosen.size()) == n - 1;
            if (!tree && find(u1) == find(u2)) return;
            const std::size_t base = (tree ? 0 : 4) + (positive - 1);
            ++out[base];
            if (with_marked) ++out[base + 2];
            return;
        }
        for (std::size_t e = next; e + need <= g.edges.size(); ++e) {
            const int a = find(g.edges[e].u);
            const int b = find(g.edges[e].v);
            if (a == b) continue;
            parent[a] = b;
            chosen.push_back(e);
            walk(e + 1, need - 1);
            chosen.pop_back();
            parent[a] = a;
        }
    };
    for (int size : {n - 1, n - 2}) {
        std::iota(parent.begin(), parent.end(), 0);
        walk(0, static_cast<std::size_t>(size));
    }
    return out;
}

std::string tuple(const std::array<Integer, 8>& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "(") << v[i];
    return s.str() + ")";
}

std::array<Integer, 8> as_integers(const std::array<long, 8>& v) {
    std::array<Integer, 8> out{};
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

Result count_tables() {
    Result r;
    std::size_t deviations = 0;
    bool only_known = true;
    for (const auto& k : tabulated_kinds()) {
        const auto t = make_omega(k);
        const auto g = tangle_graph(t);
        const auto computed = almost_tree_counts(g, *t.marked).table();
        const auto oracle = enumerated_counts(g, *t.marked);
        r.expect_eq(tuple(oracle), tuple(computed), text(k) + " enumeration");
        const auto stated = as_integers(stated_counts(k));
        if (stated == computed) continue;
        ++deviations;
        r.fail(text(k) + ": stated " + tuple(stated) + ", computed " + tuple(computed));
        for (std::size_t i = 0; i < 8; ++i) {
            const bool x2_or_x2e = i == 1 || i == 3;
            if (stated[i] != computed[i] && !(k.family == OmegaFamily::BracketPQInf && k.p * k.q > 1 && x2_or_x2e))
                only_known = false;
        }
    }
    if (deviations > 0 && only_known && r.failures.size() == deviations)
        r.known = "T_bracket_pq_inf x2 and x2e at pq > 1 are not realized by its tangle graph";
    return r;
}

// ---------------------------------------------------------------------------

Integer oracle_det(const Diagram& d) { return testing::coloring_determinant(d); }

Result closed_forms() {
    Result r;
    std::size_t instances = 0;
    for (const std::string name : {"hopf", "torus_2_4", "torus_2_6", "torus_2_8", "k9_43_switch"}) {
        const auto& d = seed(name);
        const auto c = mark(d);
        const auto [a, b] = signed_pair(d, c);
        for (int n = 1; n <= 5; ++n) {
            const auto at = [&](Axis axis, TwistType type) { return oracle_det(splice(d, c, make_twist_tangle(n, axis, type))); };
            const std::string where = name + " n=" + std::to_string(n);
            r.expect_eq(abs(a + n * b), at(Axis::Vertical, TwistType::Same), where + " L^n");
            r.expect_eq(abs(n * a + b), at(Axis::Horizontal, TwistType::Same), where + " L^-n");
            r.expect_eq(abs(-a + n * b), at(Axis::Vertical, TwistType::Opposite), where + " L^nbar");
            r.expect_eq(abs(-n * a + b), at(Axis::Horizontal, TwistType::Opposite), where + " L^-nbar");
            instances += 4;
        }
    }

    // Omega splices at crossings with property (II).
    std::size_t hosts = 0;
    for (const auto& e : load_catalog()) {
        if (!e.marked()) continue;
        const auto& d = e.diagram;
        const auto c = *e.marked();
        if (check_properties(d, c).prop_II != Tristate::True) continue;
        ++hosts;
        const auto [a, b] = signed_pair(d, c);
        for (const auto& k : tabulated_kinds()) {
            const auto t = make_omega(k);
            const auto n = almost_tree_counts(tangle_graph(t), *t.marked).table();
            const Integer predicted = abs((n[0] - n[1]) * a + (n[5] - n[4]) * b);
            r.expect_eq(predicted, oracle_det(splice(d, c, t)), e.name + " with " + text(k));
            ++instances;
        }
    }
    r.expect(hosts >= 3, "fewer than three property (II) hosts in the catalog");
    r.info.push_back(std::to_string(instances) + " instances at " + std::to_string(hosts) + " property (II) hosts");
    return r;
}

void check_verdict(Result& r, const std::string& name, const Diagram& d) {
    const auto v = certify(d);
    if (!v.certified()) {
        r.fail(name + ": " + std::string(verdict_name(v.kind)) + " " + v.reason);
        return;
    }
    if (auto bad = check_certificate(*v.certificate)) r.fail(name + " certificate: " + *bad);
}

Result certifier() {
    Result r;
    std::size_t alternating = 0;
    for (const auto& e : load_catalog()) {
        const bool reduced = std::ranges::none_of(std::views::iota(std::size_t{0}, e.diagram.size()),
                                                  [&](std::size_t c) { return is_nugatory(e.diagram, c); });
        if (!is_alternating(e.diagram) || !reduced || !is_connected(e.diagram)) continue;
        ++alternating;
        check_verdict(r, e.name, e.diagram);
    }
    r.expect(alternating >= 6, "too few alternating catalog diagrams");
    check_verdict(r, "8_21", seed("k8_21"));
    const auto& t8 = seed("torus_2_8");
    check_verdict(r, "8_1", build_opposite_twists(t8, mark(t8), 2, Axis::Horizontal).output);
    const auto& l = seed("k9_43_switch");
    check_verdict(r, "11n_90", build_opposite_twists(l, mark(l), 3, Axis::Vertical).output);
    const auto& t4 = seed("torus_2_4");
    check_verdict(r, "10_151", build_omega(t4, mark(t4), {OmegaFamily::BracketPQ, 2, 1}).output);
    r.info.push_back(std::to_string(alternating) + " alternating catalog diagrams");
    return r;
}

Result end_to_end() {
    Result r;
    const BuildOptions verify{true, default_budget()};
    const auto expect_built = [&](const std::string& name, const Construction& c, long det) {
        r.expect_eq(det, determinant(c.output), name + " det");
        r.expect_eq(det, oracle_det(c.output), name + " oracle det");
        r.expect(c.claims_qa(), name + ": rule not applicable");
        r.expect(c.verification == VerdictKind::Certified, name + ": not certified");
    };
    const auto& t8 = seed("torus_2_8");
    expect_built("8_1", build_opposite_twists(t8, mark(t8), 2, Axis::Horizontal, verify), 13);
    const auto& l = seed("k9_43_switch");
    const auto k11 = build_opposite_twists(l, mark(l), 3, Axis::Vertical, verify);
    expect_built("11n_90", k11, 41);
    r.expect_eq(11u, k11.output.size(), "11n_90 crossings");
    const auto& t4 = seed("torus_2_4");
    expect_built("10_151", build_omega(t4, mark(t4), {OmegaFamily::BracketPQ, 2, 1}, verify), 43);

    const auto& k821 = seed("k8_21");
    const auto k942 = build_opposite_twists(k821, mark(k821), 3, Axis::Vertical);
    r.expect(k942.applicable() == Tristate::False, "9_42: rule reported applicable");
    r.expect(k942.violated().value_or("").find("det(L_0) < det(L_inf)") != std::string::npos,
             "9_42: the failing hypothesis is not property (II)");
    r.expect_eq(7, determinant(k942.output), "9_42 det");
    r.expect(!certify(k942.output).certified(), "raw 9_42 splice certified");
    return r;
}

// ---------------------------------------------------------------------------

// The stated condition for the determinant property at the distinguished
// crossing, with a = det(L_0) and b = det(L_inf) at the host.
bool stated_condition(const OmegaKind& k, const Integer& a, const Integer& b) {
    const long p = k.p;
    const long q = k.q;
    switch (k.family) {
        case OmegaFamily::BracketQ: return q >= 3 || (q == 2 && a < 2 * b);
        case OmegaFamily::UpperP: return a < b;
        case OmegaFamily::LowerQ: return q >= 2 || a < 3 * b;
        case OmegaFamily::UpperPQ: return q >= 2 || p == 1 || (p - 1) * a < (2 * p - 1) * b;
        case OmegaFamily::LowerPQ: return q >= 2 || a < 2 * b;
        case OmegaFamily::BracketPQInf: return q >= 2 * p + 1 || ((2 * p + 1) - q) * a < (q * (2 * p + 1) + 2) * b;
        case OmegaFamily::BracketPQ: return q > 1 || p * a < (6 * p + 1) * b;
        default: throw std::invalid_argument("no stated condition");
    }
}

struct Host {
    std::string name;
    Diagram diagram;
    std::size_t crossing;
    Integer zero;
    Integer infinity;
};

// Quasi-alternating crossings with a wide spread of det(L_0) / det(L_inf):
// catalog marks and the new crossings of same twists at them.
std::vector<Host> grid_hosts() {
    std::vector<Host> hosts;
    const auto add = [&](const std::string& name, const Diagram& d, std::size_t c) {
        if (d.crossings[c].over != Over::NwSe || is_nugatory(d, c)) return;
        const auto prop = check_det_property(d, c);
        if (!prop.holds) return;
        hosts.push_back({name, d, c, prop.dets.zero, prop.dets.infinity});
    };
    for (const auto& e : load_catalog()) {
        if (!e.marked()) continue;
        const auto c = *e.marked();
        add(e.name, e.diagram, c);
        for (int n = 2; n <= 7; ++n)
            for (auto axis : {Axis::Vertical, Axis::Horizontal}) {
                const auto built = build_same_twists(e.diagram, c, n, axis).output;
                const std::string name = e.name + (axis == Axis::Vertical ? " L^" : " L^-") + std::to_string(n);
                add(name, built, spliced_index(e.diagram, 0));
            }
    }
    return hosts;
}

Result property_grid() {
    Result r;
    const auto hosts = grid_hosts();
    std::size_t explained = 0;
    std::map<OmegaFamily, std::string> reasons;
    std::size_t evaluations = 0;
    for (const auto& k : tabulated_kinds()) {
        const auto t = make_omega(k);
        std::size_t sides[2] = {0, 0};
        for (const auto& h : hosts) {
            const auto spliced = splice(h.diagram, h.crossing, t);
            const bool holds = check_det_property(spliced, spliced_index(h.diagram, *t.marked)).holds;
            const bool stated = stated_condition(k, h.zero, h.infinity);
            ++sides[stated];
            ++evaluations;
            if (holds == stated) continue;
            std::ostringstream s;
            s << text(k) << " at " << h.name << " (det L_0 = " << h.zero << ", det L_inf = " << h.infinity
              << "): stated " << stated << ", computed " << holds;
            r.fail(s.str());
            // At q = 1 both factors of the sign condition can be negative.
            if (k.family == OmegaFamily::LowerPQ && k.q == 1 && holds && k.p * h.zero > (2 * k.p + 1) * h.infinity) {
                ++explained;
                reasons[k.family] = "T_lower_pq at q=1 also has the property when p det(L_0) > (2p+1) det(L_inf)";
            }
            if (k.family == OmegaFamily::BracketPQInf && k.p * k.q > 1) {
                ++explained;
                reasons[k.family] = "the T_bracket_pq_inf condition rests on its unrealizable x2, x2e counts";
            }
        }
        // Conditions that depend on the host must be seen both ways.
        const Integer big = 1000;
        const bool constant = stated_condition(k, big, 1) == stated_condition(k, 1, big);
        if (!constant && (sides[0] == 0 || sides[1] == 0)) r.fail(text(k) + ": only one side of the condition reached");
    }
    if (!r.failures.empty() && explained == r.failures.size())
        for (const auto& [family, reason] : reasons) r.known += (r.known.empty() ? "" : "; ") + reason;
    r.info.push_back(std::to_string(evaluations) + " splices over " + std::to_string(hosts.size()) + " hosts");
    return r;
}

Result existence() {
    Result r;
    std::size_t checks = 0;
    for (const auto& e : load_catalog()) {
        if (!e.marked()) continue;
        const auto& d = e.diagram;
        const auto c = *e.marked();
        if (check_properties(d, c).qa_crossing != Tristate::True) continue;
        for (int n : {2, 3}) {
            const auto horizontal = build_same_twists(d, c, n, Axis::Horizontal).output;
            const auto vertical = build_same_twists(d, c, n, Axis::Vertical).output;
            for (int i = 0; i < n; ++i) {
                const auto at = spliced_index(d, static_cast<std::size_t>(i));
                const std::string where = e.name + " n=" + std::to_string(n) + " crossing " + std::to_string(i);
                const auto h = check_properties(horizontal, at);
                r.expect(h.prop_II == Tristate::True, where + " of L^-n: property (II) " +
                                                          std::string(tristate_name(h.prop_II)));
                const auto v = check_properties(vertical, at);
                r.expect(v.prop_III == Tristate::True, where + " of L^n: property (III) " +
                                                           std::string(tristate_name(v.prop_III)));
                checks += 2;
            }
        }
    }
    r.info.push_back(std::to_string(checks) + " crossings");
    return r;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        Result (*run)();
    };
    const Criterion criteria[] = {
        {1, "determinant reproduction", determinant_reproduction},
        {2, "oracle equivalence", oracle_equivalence},
        {3, "almost spanning tree tables", count_tables},
        {4, "closed-form determinant identities", closed_forms},
        {5, "certifier soundness and coverage", certifier},
        {6, "end-to-end constructions", end_to_end},
        {7, "determinant property grid", property_grid},
        {8, "existence of property (II) and (III) crossings", existence},
    };
    int unexpected = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::string detail;
        for (const auto& i : r.info) detail += (detail.empty() ? "" : ", ") + i;
        std::cout << "criterion " << c.id << " (" << c.title << "): ";
        if (r.failures.empty()) {
            std::cout << "PASS";
        } else if (!r.known.empty()) {
            std::cout << "FAIL (known: " << r.known << ")";
        } else {
            std::cout << "FAIL";
            ++unexpected;
        }
        std::cout << " [" << (detail.empty() ? "" : detail + ", ") << ms << " ms]\n";
        constexpr std::size_t shown = 12;
        for (std::size_t i = 0; i < r.failures.size() && i < shown; ++i) std::cout << "    " << r.failures[i] << '\n';
        if (r.failures.size() > shown) std::cout << "    ... " << r.failures.size() - shown << " more\n";
    }
    return unexpected == 0 ? 0 : 1;
}
