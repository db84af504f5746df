#include "qalinks/construct.hpp"

#include "qalinks/pdio.hpp"

#include <sstream>

namespace qalinks {

std::string_view rule_name(Rule r) {
    switch (r) {
        case Rule::SameTypeAlternating: return "same-type-alternating";
        case Rule::OppositeTwists: return "opposite-twists";
        case Rule::SameTwists: return "same-twists";
        case Rule::OppositePM: return "opposite-pm";
        case Rule::OmegaUnderII: return "omega";
        case Rule::ChiAny: return "chi";
        case Rule::ConnectedSumProp: return "connected-sum";
    }
    return "?";
}

std::optional<Rule> parse_rule_name(std::string_view name) {
    for (auto r : {Rule::SameTypeAlternating, Rule::OppositeTwists, Rule::SameTwists, Rule::OppositePM,
                   Rule::OmegaUnderII, Rule::ChiAny, Rule::ConnectedSumProp})
        if (rule_name(r) == name) return r;
    return std::nullopt;
}

Tristate Construction::applicable() const {
    Tristate out = Tristate::True;
    for (const auto& h : hypotheses) {
        if (h.status == Tristate::False) return Tristate::False;
        if (h.status == Tristate::Unknown) out = Tristate::Unknown;
    }
    return out;
}

std::optional<std::string> Construction::violated() const {
    for (const auto& h : hypotheses)
        if (h.status != Tristate::True)
            return h.statement + (h.status == Tristate::False ? " fails" : " is undecided");
    return std::nullopt;
}

namespace {

void require_host(const Diagram& d, std::size_t c) {
    if (c >= d.size()) throw std::out_of_range("crossing index out of range");
    if (d.crossings[c].over != Over::NwSe)
        throw std::invalid_argument("host crossing must have its NW-SE strand over (d0)");
}

Tristate truth(bool b) { return b ? Tristate::True : Tristate::False; }

Tristate from_verdict(VerdictKind k) {
    if (k == VerdictKind::Certified) return Tristate::True;
    return k == VerdictKind::Inconclusive ? Tristate::Unknown : Tristate::False;
}

std::string dets_text(const DetTriple& t) {
    std::ostringstream s;
    s << "det(L_0) = " << t.zero << ", det(L_inf) = " << t.infinity;
    return s.str();
}

// Whether c is a quasi-alternating crossing of d.
Tristate qa_crossing(const Diagram& d, std::size_t c, const BuildOptions& opt) {
    const auto prop = check_det_property(d, c);
    if (!prop.holds) return Tristate::False;
    const auto zero = from_verdict(certify(smooth(d, c, Smoothing::Zero), opt.budget).kind);
    if (zero == Tristate::False) return zero;
    const auto inf = from_verdict(certify(smooth(d, c, Smoothing::Infinity), opt.budget).kind);
    if (inf == Tristate::False) return inf;
    return zero == Tristate::True && inf == Tristate::True ? Tristate::True : Tristate::Unknown;
}

void add_property_hypotheses(Construction& out, const PropertyReport& r, bool needs_zero_smaller) {
    out.hypotheses.push_back({"c is a quasi-alternating crossing", r.qa_crossing});
    out.hypotheses.push_back({"property (I) at c", r.prop_I});
    if (needs_zero_smaller)
        out.hypotheses.push_back({"det(L_0) < det(L_inf) at c (" + dets_text(r.dets) + ")",
                                  truth(r.dets.zero < r.dets.infinity)});
    else
        out.hypotheses.push_back({"det(L_inf) < det(L_0) at c (" + dets_text(r.dets) + ")",
                                  truth(r.dets.infinity < r.dets.zero)});
}

void finish(Construction& out, const BuildOptions& opt) {
    if (opt.verify) out.verification = certify(out.output, opt.budget).kind;
}

CrossingCheck check_crossing(const Diagram& d, std::size_t x, bool zero_larger) {
    const auto prop = check_det_property(d, x);
    const bool inequality = zero_larger ? prop.dets.infinity < prop.dets.zero : prop.dets.zero < prop.dets.infinity;
    return CrossingCheck{x, prop.dets, prop.holds, inequality};
}

// A tangle turned a quarter turn so that splicing it at a crossing built
// with a rotated frame places it upright.
TangleDiagram upright_at_rotated(const TangleDiagram& t) {
    TangleDiagram out = t;
    out.endpoints = {t.endpoints[1], t.endpoints[2], t.endpoints[3], t.endpoints[0]};
    return out;
}

struct SplicePrediction {
    Integer det, zero, infinity;
};

// Determinants after splicing t at a host with sums a, b, and of the two
// smoothings at t's marked crossing.
SplicePrediction predict_with_mark(const SignedPair& host, const TangleDiagram& t) {
    const auto g = tangle_graph(t);
    const std::size_t e = *t.marked;
    const auto counts = almost_tree_counts(g, e);
    const Integer x = counts.trees.alternating_sum();
    const Integer y = counts.almost.alternating_sum();
    const Integer xe = counts.trees_with_edge.alternating_sum();
    const Integer ye = counts.almost_with_edge.alternating_sum();
    const bool positive = g.edges[e].sign > 0;
    // Trees through e are trees of the contraction with e added back.
    const Integer x_contract = positive ? Integer(-xe) : xe;
    const Integer y_contract = positive ? Integer(-ye) : ye;
    const Integer contract = abs(-host.a * x_contract + host.b * y_contract);
    const Integer remove = abs(-host.a * (x - xe) + host.b * (y - ye));
    // A constructed negative crossing has its frame turned, so its Zero
    // smoothing deletes the edge instead of contracting it.
    return {abs(-host.a * x + host.b * y), positive ? contract : remove, positive ? remove : contract};
}

}  // namespace

SignedPair host_pair(const Diagram& d, std::size_t c) {
    require_host(d, c);
    return signed_pair(d, c);
}

Integer predicted_splice_det(const SignedPair& host, const TangleDiagram& t) {
    const auto g = tangle_graph(t);
    const Integer x = signed_tree_sum(g);
    const Integer y = signed_tree_sum(g.merged(g.boundary_pair->first, g.boundary_pair->second));
    return abs(-host.a * x + host.b * y);
}

Construction build_same_type_alternating(const Diagram& d, std::size_t c, const TangleDiagram& t,
                                         const BuildOptions& opt) {
    const auto pair = host_pair(d, c);
    Construction out;
    out.rule = Rule::SameTypeAlternating;
    out.output = splice(d, c, t);
    out.predicted_det = predicted_splice_det(pair, t);
    out.hypotheses.push_back({"c is a quasi-alternating crossing", qa_crossing(d, c, opt)});
    out.hypotheses.push_back({"tangle is alternating", truth(is_alternating(t))});
    out.hypotheses.push_back({"tangle is reduced", truth(is_reduced(t))});
    out.hypotheses.push_back({"tangle has the same type as c", truth(classify_type(t) == TypeClass::Same)});
    finish(out, opt);
    return out;
}

Construction build_opposite_twists(const Diagram& d, std::size_t c, int n, Axis axis, const BuildOptions& opt) {
    const auto pair = host_pair(d, c);
    Construction out;
    out.rule = Rule::OppositeTwists;
    out.output = splice(d, c, make_twist_tangle(n, axis, TwistType::Opposite));
    out.predicted_det = axis == Axis::Vertical ? abs(-pair.a + n * pair.b) : abs(-n * pair.a + pair.b);
    add_property_hypotheses(out, check_properties(d, c, opt.budget), axis == Axis::Vertical);
    finish(out, opt);
    return out;
}

Construction build_same_twists(const Diagram& d, std::size_t c, int n, Axis axis, const BuildOptions& opt) {
    const auto pair = host_pair(d, c);
    Construction out;
    out.rule = Rule::SameTwists;
    out.output = splice(d, c, make_twist_tangle(n, axis, TwistType::Same));
    out.predicted_det = axis == Axis::Vertical ? abs(pair.a + n * pair.b) : abs(n * pair.a + pair.b);
    out.hypotheses.push_back({"c is a quasi-alternating crossing", qa_crossing(d, c, opt)});
    for (int i = 0; i < n; ++i)
        out.crossing_checks.push_back(
            check_crossing(out.output, spliced_index(d, static_cast<std::size_t>(i)), axis == Axis::Vertical));
    finish(out, opt);
    return out;
}

Construction build_opposite_pm(const Diagram& d, std::size_t c, const TangleDiagram& t, PmVariant variant,
                               const BuildOptions& opt) {
    host_pair(d, c);
    Construction out;
    out.rule = Rule::OppositePM;
    const bool vertical = variant == PmVariant::Plus || variant == PmVariant::Minus;
    out.hypotheses.push_back({"tangle is alternating", truth(is_alternating(t))});
    out.hypotheses.push_back({"tangle is reduced", truth(t.size() > 0 && is_reduced(t))});
    out.hypotheses.push_back({"tangle has the opposite type to c", truth(classify_type(t) == TypeClass::Opposite)});
    add_property_hypotheses(out, check_properties(d, c, opt.budget), vertical);
    if (t.size() == 0 || !is_reduced(t) || classify_type(t) == TypeClass::NotUniform) {
        out.output = d;  // nothing sensible to splice
        return out;
    }
    const auto composite = make_pm_tangle(t, variant);
    out.output = splice(d, c, composite);
    out.predicted_det = predicted_splice_det(signed_pair(d, c), composite);

    // Two opposite twists, then t dropped into the twist it replaces.
    const auto twists = splice(d, c, make_twist_tangle(2, vertical ? Axis::Vertical : Axis::Horizontal,
                                                       TwistType::Opposite));
    const bool t_first = variant == PmVariant::Plus || variant == PmVariant::UpperPlus;
    const std::size_t slot = spliced_index(d, t_first ? 0 : 1);
    out.intermediates.push_back({vertical ? "two vertical opposite twists" : "two horizontal opposite twists", twists});
    out.intermediates.push_back({"tangle spliced into one of the twists", splice(twists, slot, upright_at_rotated(t))});
    finish(out, opt);
    return out;
}

Construction build_omega(const Diagram& d, std::size_t c, const OmegaKind& kind, const BuildOptions& opt) {
    const auto pair = host_pair(d, c);
    const auto t = make_omega(kind);
    Construction out;
    out.rule = Rule::OmegaUnderII;
    out.output = splice(d, c, t);
    const auto predicted = predict_with_mark(pair, t);
    out.predicted_det = predicted.det;
    out.new_crossing = spliced_index(d, *t.marked);
    out.predicted_det_zero = predicted.zero;
    out.predicted_det_infinity = predicted.infinity;
    add_property_hypotheses(out, check_properties(d, c, opt.budget), true);
    finish(out, opt);
    return out;
}

Construction build_connected_sum_props(const Diagram& d, std::size_t c, const OmegaKind& kind,
                                       const BuildOptions& opt) {
    if (kind.family != OmegaFamily::BracketPQZero && kind.family != OmegaFamily::Prime)
        throw std::invalid_argument("connected-sum rule takes T_zero_pq or T_prime");
    const auto pair = host_pair(d, c);
    const auto t = make_omega(kind);
    Construction out;
    out.rule = Rule::ConnectedSumProp;
    out.output = splice(d, c, t);
    out.new_crossing = spliced_index(d, *t.marked);
    if (kind.family == OmegaFamily::BracketPQZero) {
        out.predicted_det = kind.p * abs((kind.q - 1) * pair.a + pair.b);
        out.hypotheses.push_back({"c is a quasi-alternating crossing", qa_crossing(d, c, opt)});
        if (kind.q > 1)
            out.intermediates.push_back(
                {"horizontal same twists", splice(d, c, make_twist_tangle(kind.q - 1, Axis::Horizontal, TwistType::Same))});
    } else {
        out.predicted_det = kind.p * abs(-pair.a + pair.b);
        const auto r = check_properties(d, c, opt.budget);
        out.hypotheses.push_back({"c is a quasi-alternating crossing", r.qa_crossing});
        out.hypotheses.push_back({"property (I) at c", r.prop_I});
        out.intermediates.push_back({"crossing changed at c", crossing_change(d, c)});
    }
    finish(out, opt);
    return out;
}

Construction build_chi(const Diagram& d, std::size_t c, const OmegaKind& kind, bool bar, const BuildOptions& opt) {
    host_pair(d, c);
    const auto t = make_omega(kind);
    const auto chi = make_chi_tangle(t, bar);
    Construction out;
    out.rule = Rule::ChiAny;
    out.output = splice(d, c, chi);
    out.hypotheses.push_back({"c is a quasi-alternating crossing", qa_crossing(d, c, opt)});

    // Two horizontal same twists; the tangle goes into one of them, where
    // the crossing has property (II).
    const auto twists = splice(d, c, make_twist_tangle(2, Axis::Horizontal, TwistType::Same));
    out.intermediates.push_back({"two horizontal same twists", twists});
    for (std::size_t i = 0; i < 2; ++i) out.crossing_checks.push_back(check_crossing(twists, spliced_index(d, i), false));
    const std::size_t slot = spliced_index(d, bar ? 1 : 0);
    const auto predicted = predict_with_mark(signed_pair(twists, slot), t);
    out.predicted_det = predicted.det;
    out.new_crossing = spliced_index(d, *chi.marked);
    out.predicted_det_zero = predicted.zero;
    out.predicted_det_infinity = predicted.infinity;
    finish(out, opt);
    return out;
}

nlohmann::json to_json(const Construction& c) {
    nlohmann::json hyps = nlohmann::json::array();
    for (const auto& h : c.hypotheses) hyps.push_back({{"statement", h.statement}, {"holds", tristate_name(h.status)}});
    nlohmann::json j{{"rule", rule_name(c.rule)},
                     {"hypotheses", hyps},
                     {"applicable", tristate_name(c.applicable())},
                     {"claims_qa", c.claims_qa()},
                     {"crossings", c.output.size()},
                     {"det", to_json(determinant(c.output))}};
    if (c.predicted_det) j["predicted_det"] = to_json(*c.predicted_det);
    if (c.new_crossing) j["new_crossing"] = *c.new_crossing;
    if (c.predicted_det_zero) j["predicted_det_zero"] = to_json(*c.predicted_det_zero);
    if (c.predicted_det_infinity) j["predicted_det_infinity"] = to_json(*c.predicted_det_infinity);
    if (auto v = c.violated()) j["violated"] = *v;
    if (c.verification) j["certified"] = *c.verification == VerdictKind::Certified;
    if (!c.crossing_checks.empty()) {
        auto arr = nlohmann::json::array();
        for (const auto& x : c.crossing_checks)
            arr.push_back({{"crossing", x.crossing},
                           {"det_zero", to_json(x.dets.zero)},
                           {"det_infinity", to_json(x.dets.infinity)},
                           {"det_property", x.det_property},
                           {"inequality", x.inequality}});
        j["crossing_checks"] = arr;
    }
    return j;
}

}  // namespace qalinks
