#pragma once

#include "qalinks/diagram.hpp"
#include "qalinks/integer.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qalinks {

struct DetTriple {
    Integer whole;      // det(L)
    Integer zero;       // det of the Zero smoothing
    Integer infinity;   // det of the Infinity smoothing
};

struct DetPropertyResult {
    bool holds = false;
    DetTriple dets;
};

// det(L) = det(L_0) + det(L_inf) with both summands at least one.
DetPropertyResult check_det_property(const Diagram& d, std::size_t c);

// One node of a certificate.  Internal nodes carry the chosen crossing and
// two children (Zero smoothing first).  Leaves are unknot diagrams: either
// crossingless, or reduced to the crossingless circle by the recorded strand
// slides (see replay_unknotting).
struct CertificateNode {
    std::string digest;
    Diagram diagram;  // simplified
    std::optional<std::size_t> crossing;
    DetTriple dets;
    std::vector<CertificateNode> children;
    std::vector<std::size_t> unknotting;

    bool is_leaf() const { return !crossing.has_value(); }
};

enum class VerdictKind : std::uint8_t { Certified, ObstructionDetOne, NoCrossingInDiagram, Inconclusive };

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<CertificateNode> certificate;
    std::string reason;
    std::size_t nodes_visited = 0;

    bool certified() const { return kind == VerdictKind::Certified; }
};

std::string_view verdict_name(VerdictKind k);

// Node limit from QALINKS_BUDGET, or one million.
std::size_t default_budget();

// Depth-first search for a certificate, trying crossings in index order and
// memoizing on canonical codes of simplified diagrams.  Deterministic: the
// same input and a sufficient budget always give the same certificate.
Verdict certify(const Diagram& d, std::size_t budget = default_budget());

// Recomputes every determinant, sum, smoothing and leaf of a certificate.
// Returns a description of the first problem, or nothing when it is sound.
std::optional<std::string> check_certificate(const CertificateNode& root);

enum class Tristate : std::uint8_t { False, True, Unknown };

std::string_view tristate_name(Tristate t);

struct PropertyReport {
    bool det_property = false;
    DetTriple dets;
    Tristate qa_crossing = Tristate::False;  // det property and both smoothings certified
    Tristate prop_I = Tristate::False;       // the switched diagram is certified
    Tristate prop_II = Tristate::False;      // QA crossing, (I) and det(L_0) < det(L_inf)
    Tristate prop_III = Tristate::False;     // QA crossing, (I) and det(L_inf) < det(L_0)
    VerdictKind switched = VerdictKind::Inconclusive;
};

PropertyReport check_properties(const Diagram& d, std::size_t c, std::size_t budget = default_budget());

nlohmann::json to_json(const CertificateNode& node);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const PropertyReport& r);

}  // namespace qalinks
