#pragma once

#include "qalinks/qa.hpp"
#include "qalinks/tangle.hpp"

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qalinks {

enum class Rule : std::uint8_t {
    SameTypeAlternating,
    OppositeTwists,
    SameTwists,
    OppositePM,
    OmegaUnderII,
    ChiAny,
    ConnectedSumProp,
};

std::string_view rule_name(Rule r);
std::optional<Rule> parse_rule_name(std::string_view name);

struct Hypothesis {
    std::string statement;
    Tristate status = Tristate::Unknown;
};

struct Intermediate {
    std::string label;
    Diagram diagram;
};

// Determinants at one crossing of the output.
struct CrossingCheck {
    std::size_t crossing = 0;
    DetTriple dets;
    bool det_property = false;
    bool inequality = false;  // the strict inequality the rule predicts there
};

struct Construction {
    Rule rule = Rule::OppositeTwists;
    Diagram output;
    std::optional<Integer> predicted_det;
    // Closed-form determinants of the two smoothings at the new distinguished
    // crossing, when the rule has one.
    std::optional<std::size_t> new_crossing;
    std::optional<Integer> predicted_det_zero;
    std::optional<Integer> predicted_det_infinity;
    std::vector<Hypothesis> hypotheses;
    std::vector<Intermediate> intermediates;
    std::vector<CrossingCheck> crossing_checks;
    std::optional<VerdictKind> verification;

    // All hypotheses hold.
    Tristate applicable() const;
    bool claims_qa() const { return applicable() == Tristate::True; }
    // The first hypothesis that failed or could not be decided.
    std::optional<std::string> violated() const;
};

struct BuildOptions {
    bool verify = false;  // certify the output
    std::size_t budget = default_budget();
};

// Signed tree sums a, b at crossing c, which must have NW-SE over.
SignedPair host_pair(const Diagram& d, std::size_t c);

// |-a X(-1) + b Y(-1)| with X and Y the spanning and almost spanning tree
// sums of the tangle graph: the determinant of d with c replaced by t.
Integer predicted_splice_det(const SignedPair& host, const TangleDiagram& t);

Construction build_same_type_alternating(const Diagram& d, std::size_t c, const TangleDiagram& t,
                                         const BuildOptions& opt = {});

Construction build_opposite_twists(const Diagram& d, std::size_t c, int n, Axis axis, const BuildOptions& opt = {});

Construction build_same_twists(const Diagram& d, std::size_t c, int n, Axis axis, const BuildOptions& opt = {});

Construction build_opposite_pm(const Diagram& d, std::size_t c, const TangleDiagram& t, PmVariant variant,
                               const BuildOptions& opt = {});

Construction build_omega(const Diagram& d, std::size_t c, const OmegaKind& kind, const BuildOptions& opt = {});

// kind.family must be BracketPQZero or Prime.
Construction build_connected_sum_props(const Diagram& d, std::size_t c, const OmegaKind& kind,
                                       const BuildOptions& opt = {});

Construction build_chi(const Diagram& d, std::size_t c, const OmegaKind& kind, bool bar,
                       const BuildOptions& opt = {});

nlohmann::json to_json(const Construction& c);

}  // namespace qalinks
