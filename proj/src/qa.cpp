#include "qalinks/qa.hpp"

#include "qalinks/pdio.hpp"
#include "qalinks/taitgraph.hpp"

#include <cstdlib>
#include <map>

namespace qalinks {

DetPropertyResult check_det_property(const Diagram& d, std::size_t c) {
    if (c >= d.size()) throw std::out_of_range("crossing index out of range");
    DetTriple dets{determinant(d), determinant(smooth(d, c, Smoothing::Zero)),
                   determinant(smooth(d, c, Smoothing::Infinity))};
    const bool holds = dets.zero >= 1 && dets.infinity >= 1 && dets.whole == dets.zero + dets.infinity;
    return {holds, std::move(dets)};
}

std::string_view verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Certified: return "certified";
        case VerdictKind::ObstructionDetOne: return "determinant 1 obstruction";
        case VerdictKind::NoCrossingInDiagram: return "no crossing in diagram";
        case VerdictKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string_view tristate_name(Tristate t) {
    switch (t) {
        case Tristate::False: return "false";
        case Tristate::True: return "true";
        case Tristate::Unknown: return "unknown";
    }
    return "?";
}

std::size_t default_budget() {
    constexpr std::size_t fallback = 1'000'000;
    const char* env = std::getenv("QALINKS_BUDGET");
    if (!env || !*env) return fallback;
    try {
        return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
        return fallback;
    }
}

namespace {

struct BudgetExhausted {};

struct Outcome {
    VerdictKind kind;
    std::optional<CertificateNode> certificate;
    std::string reason;
};

class Search {
public:
    explicit Search(std::size_t budget) : budget_(budget) {}

    std::size_t visited() const { return visited_; }

    Outcome run(const Diagram& raw) {
        Diagram s = simplify(raw);
        s.marked.reset();
        auto code = canonical_code(s);
        if (auto it = memo_.find(code); it != memo_.end()) return it->second;
        if (++visited_ > budget_) throw BudgetExhausted{};
        Outcome out = explore(s);
        memo_.emplace(std::move(code), out);
        return out;
    }

private:
    std::map<std::vector<int>, Outcome> memo_;
    std::size_t budget_;
    std::size_t visited_ = 0;

    Outcome explore(const Diagram& s) {
        if (s.size() == 0) {
            if (s.free_loops == 1)
                return {VerdictKind::Certified, CertificateNode{digest(s), s, std::nullopt, {1, 0, 0}, {}, {}}, ""};
            return {VerdictKind::NoCrossingInDiagram, std::nullopt, "split diagram (determinant 0)"};
        }
        const Integer det = determinant(s);
        if (det == 0) return {VerdictKind::NoCrossingInDiagram, std::nullopt, "determinant 0"};
        if (det == 1) {
            if (auto moves = find_unknotting(s)) {
                CertificateNode leaf{digest(s), s, std::nullopt, {1, 0, 0}, {}, std::move(*moves)};
                return {VerdictKind::Certified, std::move(leaf), ""};
            }
            return {VerdictKind::ObstructionDetOne, std::nullopt,
                    "determinant 1 obstruction: no crossing can split the determinant"};
        }

        bool undecided = false;
        for (std::size_t x = 0; x < s.size(); ++x) {
            if (is_nugatory(s, x)) continue;
            const Diagram zero = smooth(s, x, Smoothing::Zero);
            const Diagram infinity = smooth(s, x, Smoothing::Infinity);
            const Integer dz = determinant(zero);
            const Integer di = determinant(infinity);
            if (dz < 1 || di < 1 || dz + di != det) continue;

            Outcome left = run(zero);
            if (!left.certificate) {
                undecided = undecided || left.kind != VerdictKind::NoCrossingInDiagram;
                continue;
            }
            Outcome right = run(infinity);
            if (!right.certificate) {
                undecided = undecided || right.kind != VerdictKind::NoCrossingInDiagram;
                continue;
            }
            CertificateNode node{digest(s), s, x, {det, dz, di}, {}, {}};
            node.children.push_back(std::move(*left.certificate));
            node.children.push_back(std::move(*right.certificate));
            return {VerdictKind::Certified, std::move(node), ""};
        }
        if (undecided)
            return {VerdictKind::Inconclusive, std::nullopt,
                    "a smoothing of determinant 1 could not be reduced to the crossingless unknot"};
        return {VerdictKind::NoCrossingInDiagram, std::nullopt,
                "no crossing of this diagram satisfies the determinant property with certified smoothings"};
    }
};

}  // namespace

Verdict certify(const Diagram& d, std::size_t budget) {
    Search search(budget);
    try {
        Outcome out = search.run(d);
        return Verdict{out.kind, std::move(out.certificate), std::move(out.reason), search.visited()};
    } catch (const BudgetExhausted&) {
        return Verdict{VerdictKind::Inconclusive, std::nullopt,
                       "node budget of " + std::to_string(budget) + " exhausted", search.visited()};
    }
}

std::optional<std::string> check_certificate(const CertificateNode& node) {
    const auto where = [&](const std::string& what) { return "node " + node.digest + ": " + what; };
    if (node.digest != digest(node.diagram)) return where("digest does not match the diagram");
    if (determinant(node.diagram) != node.dets.whole) return where("determinant mismatch");
    if (node.is_leaf()) {
        if (node.dets.whole != 1) return where("leaf determinant is not 1");
        if (!node.children.empty()) return where("leaf has children");
        Diagram end;
        try {
            end = replay_unknotting(node.diagram, node.unknotting);
        } catch (const std::exception& e) {
            return where(std::string("strand slides do not replay: ") + e.what());
        }
        if (end.size() != 0 || end.free_loops != 1) return where("leaf is not an unknot diagram");
        return std::nullopt;
    }
    const std::size_t c = *node.crossing;
    if (c >= node.diagram.size()) return where("crossing index out of range");
    if (node.children.size() != 2) return where("internal node needs two children");
    const auto prop = check_det_property(node.diagram, c);
    if (!prop.holds) return where("determinant property fails");
    if (prop.dets.zero != node.dets.zero || prop.dets.infinity != node.dets.infinity)
        return where("recorded smoothing determinants are wrong");
    const auto pair = signed_pair(node.diagram, c);
    if (pair.a * pair.b <= 0) return where("signed sums do not share a sign");
    const Diagram smoothed[2] = {simplify(smooth(node.diagram, c, Smoothing::Zero)),
                                 simplify(smooth(node.diagram, c, Smoothing::Infinity))};
    for (int i = 0; i < 2; ++i) {
        const auto& child = node.children[i];
        if (canonical_code(child.diagram) != canonical_code(smoothed[i]))
            return where("child diagram is not the simplified smoothing");
        if (child.dets.whole >= node.dets.whole) return where("determinant does not decrease");
        if (auto bad = check_certificate(child)) return bad;
    }
    return std::nullopt;
}

namespace {

Tristate from_verdict(VerdictKind k) {
    if (k == VerdictKind::Certified) return Tristate::True;
    if (k == VerdictKind::Inconclusive) return Tristate::Unknown;
    return Tristate::False;
}

Tristate all_of(std::initializer_list<Tristate> parts) {
    Tristate out = Tristate::True;
    for (auto t : parts) {
        if (t == Tristate::False) return Tristate::False;
        if (t == Tristate::Unknown) out = Tristate::Unknown;
    }
    return out;
}

Tristate truth(bool b) { return b ? Tristate::True : Tristate::False; }

}  // namespace

PropertyReport check_properties(const Diagram& d, std::size_t c, std::size_t budget) {
    PropertyReport r;
    const auto prop = check_det_property(d, c);
    r.det_property = prop.holds;
    r.dets = prop.dets;
    if (prop.holds) {
        const auto zero = certify(smooth(d, c, Smoothing::Zero), budget).kind;
        const auto infinity = certify(smooth(d, c, Smoothing::Infinity), budget).kind;
        r.qa_crossing = all_of({from_verdict(zero), from_verdict(infinity)});
    }
    r.switched = certify(crossing_change(d, c), budget).kind;
    r.prop_I = from_verdict(r.switched);
    r.prop_II = all_of({r.qa_crossing, r.prop_I, truth(r.dets.zero < r.dets.infinity)});
    r.prop_III = all_of({r.qa_crossing, r.prop_I, truth(r.dets.infinity < r.dets.zero)});
    return r;
}

nlohmann::json to_json(const CertificateNode& node) {
    nlohmann::json j{{"digest", node.digest},
                     {"crossings", node.diagram.size()},
                     {"det", to_json(node.dets.whole)}};
    if (node.is_leaf()) {
        j["leaf"] = "unknot";
        if (!node.unknotting.empty()) {
            j["pd"] = to_pd(node.diagram);
            j["slides"] = node.unknotting;
        }
        return j;
    }
    j["crossing"] = *node.crossing;
    j["det_zero"] = to_json(node.dets.zero);
    j["det_infinity"] = to_json(node.dets.infinity);
    j["pd"] = to_pd(node.diagram);
    j["zero"] = to_json(node.children[0]);
    j["infinity"] = to_json(node.children[1]);
    return j;
}

nlohmann::json to_json(const Verdict& v) {
    nlohmann::json j{{"verdict", verdict_name(v.kind)}, {"nodes_visited", v.nodes_visited}};
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.certificate) j["certificate"] = to_json(*v.certificate);
    return j;
}

nlohmann::json to_json(const PropertyReport& r) {
    return {{"det_property", r.det_property},
            {"det", to_json(r.dets.whole)},
            {"det_zero", to_json(r.dets.zero)},
            {"det_infinity", to_json(r.dets.infinity)},
            {"qa_crossing", tristate_name(r.qa_crossing)},
            {"property_I", tristate_name(r.prop_I)},
            {"property_II", tristate_name(r.prop_II)},
            {"property_III", tristate_name(r.prop_III)},
            {"switched_verdict", verdict_name(r.switched)}};
}

}  // namespace qalinks
