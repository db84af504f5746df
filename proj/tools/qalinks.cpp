// Command-line front end.  Exit codes: 0 ok, 1 internal disagreement or
// reproduction mismatch, 2 determinant 1 obstruction, 3 inconclusive, not
// certified or rule not applicable, 64 usage or parse error.

#include "qalinks/catalog.hpp"
#include "qalinks/construct.hpp"
#include "qalinks/pdio.hpp"
#include "qalinks/qa.hpp"
#include "qalinks/reproduce.hpp"
#include "qalinks/taitgraph.hpp"
#include "qalinks/tangle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <string>

namespace {

using namespace qalinks;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_obstruction = 2;
constexpr int exit_undecided = 3;
constexpr int exit_usage = 64;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool looks_like_json(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string::npos && text[first] == '{';
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(0, e.what());
    }
}

Diagram load_diagram(const std::string& path) {
    const std::string text = read_text(path);
    return looks_like_json(text) ? diagram_from_json(parse_json(text)) : parse_diagram(text);
}

TangleDiagram load_tangle(const std::string& path) {
    const std::string text = read_text(path);
    return looks_like_json(text) ? tangle_from_json(parse_json(text)) : parse_tangle(text);
}

bool is_tangle_text(const std::string& text) {
    if (looks_like_json(text)) return parse_json(text).contains("endpoints");
    return parse_pd(text).is_tangle();
}

// "c" or an empty value selects the marked crossing.
std::size_t pick_crossing(const Diagram& d, const std::string& spec) {
    if (spec.empty() || spec == "c") {
        if (!d.marked) throw UsageError("diagram has no marked crossing; pass --crossing");
        return *d.marked;
    }
    std::size_t used = 0;
    unsigned long k = 0;
    try {
        k = std::stoul(spec, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != spec.size()) throw UsageError("--crossing expects an index or 'c'");
    if (k >= d.size()) throw UsageError("crossing index out of range");
    return k;
}

int verdict_exit(VerdictKind k) {
    switch (k) {
        case VerdictKind::Certified: return exit_ok;
        case VerdictKind::ObstructionDetOne: return exit_obstruction;
        default: return exit_undecided;
    }
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

struct Common {
    bool as_json = false;
    std::size_t budget = default_budget();
};

// ---------------------------------------------------------------------------

int cmd_det(const std::string& path, const Common& o) {
    const Diagram d = load_diagram(path);
    const Integer tree = determinant(d);
    const Integer goeritz = goeritz_determinant(d);
    const bool agree = tree == goeritz;
    if (o.as_json)
        print_json({{"spanning_tree", to_json(tree)}, {"goeritz", to_json(goeritz)}, {"agree", agree}});
    else
        std::cout << "spanning-tree " << tree << "\ngoeritz " << goeritz << '\n' << (agree ? "agree" : "DISAGREE") << '\n';
    return agree ? exit_ok : exit_mismatch;
}

int cmd_tait(const std::string& path, const std::string& crossing) {
    const std::string text = read_text(path);
    json out;
    SignedPlaneGraph g;
    std::optional<std::size_t> edge;
    if (is_tangle_text(text)) {
        const TangleDiagram t = looks_like_json(text) ? tangle_from_json(parse_json(text)) : parse_tangle(text);
        g = tangle_graph(t);
        edge = t.marked;
        out["kind"] = "tangle";
        out["graph"] = to_json(g);
        out["tree_polynomial"] = to_json(tree_polynomial(g));
        out["almost_tree_polynomial"] = to_json(tree_polynomial(g.merged(g.boundary_pair->first, g.boundary_pair->second)));
    } else {
        const Diagram d = looks_like_json(text) ? diagram_from_json(parse_json(text)) : parse_diagram(text);
        std::optional<std::size_t> at;
        if (!crossing.empty() || d.marked) at = pick_crossing(d, crossing);
        g = tait_graph(d, at);
        out["kind"] = "diagram";
        out["graph"] = to_json(g);
        out["tree_polynomial"] = to_json(tree_polynomial(g));
        out["determinant"] = to_json(determinant(d));
        if (at) {
            edge = at;
            try {
                const auto pair = signed_pair(d, *at);
                out["a"] = to_json(pair.a);
                out["b"] = to_json(pair.b);
            } catch (const std::invalid_argument&) {
                // loop or bridge edge: no signed pair
            }
        }
    }
    if (edge && g.boundary_pair) {
        auto counts = json::array();
        for (const auto& v : almost_tree_counts(g, *edge).table()) counts.push_back(to_json(v));
        out["counts"] = counts;
    }
    print_json(out);
    return exit_ok;
}

int cmd_certify(const std::string& path, const Common& o) {
    const Verdict v = certify(load_diagram(path), o.budget);
    if (o.as_json) {
        print_json(to_json(v));
    } else {
        std::cout << verdict_name(v.kind) << '\n';
        if (!v.reason.empty()) std::cout << v.reason << '\n';
        if (v.certificate) std::cout << to_json(*v.certificate).dump(2) << '\n';
    }
    return verdict_exit(v.kind);
}

int cmd_props(const std::string& path, const std::string& crossing, const Common& o) {
    const Diagram d = load_diagram(path);
    const std::size_t c = pick_crossing(d, crossing);
    const auto report = check_properties(d, c, o.budget);
    if (o.as_json) {
        json j = to_json(report);
        j["crossing"] = c;
        print_json(j);
    } else {
        std::cout << "crossing " << c << "\ndet " << report.dets.whole << " = " << report.dets.zero << " + "
                  << report.dets.infinity << (report.det_property ? "" : " (fails)") << "\nqa crossing "
                  << tristate_name(report.qa_crossing) << "\nproperty I " << tristate_name(report.prop_I)
                  << "\nproperty II " << tristate_name(report.prop_II) << "\nproperty III "
                  << tristate_name(report.prop_III) << '\n';
    }
    return exit_ok;
}

struct ReplaceArgs {
    std::string seed;
    std::string crossing;
    std::string rule;
    std::string tangle;
    std::string kind;
    std::string axis = "vertical";
    std::string variant = "plus";
    int n = 2;
    int p = 1;
    int q = 1;
    bool bar = false;
    bool verify = false;
};

Axis parse_axis(const std::string& s) {
    if (s == "vertical" || s == "v") return Axis::Vertical;
    if (s == "horizontal" || s == "h") return Axis::Horizontal;
    throw UsageError("--axis must be vertical or horizontal");
}

PmVariant parse_variant(const std::string& s) {
    if (s == "plus") return PmVariant::Plus;
    if (s == "minus") return PmVariant::Minus;
    if (s == "upper-plus") return PmVariant::UpperPlus;
    if (s == "upper-minus") return PmVariant::UpperMinus;
    throw UsageError("--variant must be plus, minus, upper-plus or upper-minus");
}

OmegaKind parse_kind(const std::string& name, int p, int q) {
    const auto family = parse_omega_name(name);
    if (!family) throw UsageError("unknown tangle kind '" + name + "'");
    if (p < 1 || q < 1) throw UsageError("--p and --q must be positive");
    return {*family, p, q};
}

int cmd_replace(const ReplaceArgs& a, const Common& o) {
    const Diagram d = load_diagram(a.seed);
    const std::size_t c = pick_crossing(d, a.crossing);
    const auto rule = parse_rule_name(a.rule);
    if (!rule) throw UsageError("unknown rule '" + a.rule + "'");
    if (a.n < 1) throw UsageError("--n must be positive");
    const BuildOptions opt{a.verify, o.budget};
    const auto need_tangle = [&] {
        if (a.tangle.empty()) throw UsageError("this rule needs --tangle");
        return load_tangle(a.tangle);
    };
    Construction built;
    switch (*rule) {
        case Rule::SameTypeAlternating: built = build_same_type_alternating(d, c, need_tangle(), opt); break;
        case Rule::OppositeTwists: built = build_opposite_twists(d, c, a.n, parse_axis(a.axis), opt); break;
        case Rule::SameTwists: built = build_same_twists(d, c, a.n, parse_axis(a.axis), opt); break;
        case Rule::OppositePM: built = build_opposite_pm(d, c, need_tangle(), parse_variant(a.variant), opt); break;
        case Rule::OmegaUnderII: built = build_omega(d, c, parse_kind(a.kind, a.p, a.q), opt); break;
        case Rule::ChiAny: built = build_chi(d, c, parse_kind(a.kind, a.p, a.q), a.bar, opt); break;
        case Rule::ConnectedSumProp: built = build_connected_sum_props(d, c, parse_kind(a.kind, a.p, a.q), opt); break;
    }
    const json record = to_json(built);
    if (o.as_json) {
        print_json({{"pd", to_pd(built.output)}, {"diagram", to_json(built.output)}, {"record", record}});
    } else {
        std::cout << to_pd(built.output) << "# " << record.dump() << '\n';
    }
    if (built.verification && *built.verification != VerdictKind::Certified) return verdict_exit(*built.verification);
    return built.claims_qa() ? exit_ok : exit_undecided;
}

int cmd_closure(const std::string& path, const std::string& mode, const Common& o) {
    Closure m{};
    if (mode == "N" || mode == "numerator")
        m = Closure::Numerator;
    else if (mode == "D" || mode == "denominator")
        m = Closure::Denominator;
    else
        throw UsageError("--mode must be N or D");
    const Diagram d = closure(load_tangle(path), m);
    if (o.as_json)
        print_json(to_json(d));
    else
        std::cout << to_pd(d);
    return exit_ok;
}

int cmd_omega(const std::string& name, int p, int q, const Common& o) {
    const TangleDiagram t = make_omega(parse_kind(name, p, q));
    if (o.as_json)
        print_json(to_json(t));
    else
        std::cout << to_pd(t);
    return exit_ok;
}

int cmd_reproduce(const std::string& dir, const Common& o) {
    ReproOptions opt;
    opt.budget = o.budget;
    if (!dir.empty()) opt.catalog_dir = dir;
    const auto rows = reproduce(opt);
    const bool pass = all_rows_pass(rows);
    if (o.as_json) {
        auto arr = json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        print_json({{"rows", arr}, {"pass", pass}});
    } else {
        std::size_t subject = 7, quantity = 8, expected = 8, computed = 8;
        for (const auto& r : rows) {
            subject = std::max(subject, r.subject.size());
            quantity = std::max(quantity, r.quantity.size());
            expected = std::max(expected, r.expected.size());
            computed = std::max(computed, r.computed.size());
        }
        const auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d,
                              const std::string& e, const std::string& f) {
            std::cout << std::left << std::setw(int(subject) + 2) << a << std::setw(int(quantity) + 2) << b
                      << std::setw(int(expected) + 2) << c << std::setw(int(computed) + 2) << d << std::setw(8) << e
                      << f << '\n';
        };
        line("subject", "quantity", "expected", "computed", "basis", "status");
        for (const auto& r : rows)
            line(r.subject, r.quantity, r.expected, r.computed, r.basis,
                 std::string(row_status_name(r.status)) + (r.note.empty() ? "" : " (" + r.note + ")"));
        std::cout << (pass ? "all rows pass" : "some rows mismatch") << '\n';
    }
    return pass ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-alternating link diagrams: determinants, certificates and constructions."};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--json", common.as_json, "machine-readable output");
    app.add_option("--budget", common.budget, "certifier node limit (default: QALINKS_BUDGET or 1000000)");

    std::string path, crossing, mode = "N", kind, dir;
    int p = 1, q = 1;
    ReplaceArgs replace;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", common.as_json, "machine-readable output");
        sub->add_option("--budget", common.budget, "certifier node limit");
    };

    auto* det = app.add_subcommand("det", "determinant by spanning trees and by the Goeritz matrix");
    det->add_option("file", path, "PD or JSON file, '-' for stdin")->required();
    add_common(det);

    auto* tait = app.add_subcommand("tait", "signed Tait graph and tree polynomial as JSON");
    tait->add_option("file", path, "diagram or tangle, '-' for stdin")->required();
    tait->add_option("--crossing", crossing, "crossing whose N/S corners are shaded ('c' = marked)");
    add_common(tait);

    auto* cert = app.add_subcommand("certify", "search for a quasi-alternating certificate");
    cert->add_option("file", path, "PD or JSON file, '-' for stdin")->required();
    add_common(cert);

    auto* props = app.add_subcommand("props", "determinant property and properties (I)-(III) at a crossing");
    props->add_option("file", path, "PD or JSON file, '-' for stdin")->required();
    props->add_option("--crossing", crossing, "crossing index or 'c' for the marked one");
    add_common(props);

    auto* repl = app.add_subcommand("replace", "replace a crossing by a tangle under one of the rules");
    repl->add_option("seed", replace.seed, "seed diagram")->required();
    repl->add_option("--crossing", replace.crossing, "crossing index or 'c' for the marked one");
    repl->add_option("--rule", replace.rule,
                     "same-type-alternating, opposite-twists, same-twists, opposite-pm, omega, chi, connected-sum")
        ->required();
    repl->add_option("--n", replace.n, "number of half twists");
    repl->add_option("--axis", replace.axis, "vertical or horizontal");
    repl->add_option("--variant", replace.variant, "plus, minus, upper-plus or upper-minus");
    repl->add_option("--tangle", replace.tangle, "tangle file for same-type-alternating and opposite-pm");
    repl->add_option("--kind", replace.kind, "tangle kind for omega, chi and connected-sum");
    repl->add_option("--p", replace.p, "twist parameter p");
    repl->add_option("--q", replace.q, "twist parameter q");
    repl->add_flag("--bar", replace.bar, "put the extra crossing on the other side (chi)");
    repl->add_flag("--verify", replace.verify, "certify the output");
    add_common(repl);

    auto* clos = app.add_subcommand("closure", "numerator or denominator closure of a tangle");
    clos->add_option("file", path, "tangle file, '-' for stdin")->required();
    clos->add_option("--mode", mode, "N or D");
    add_common(clos);

    auto* omega = app.add_subcommand("omega", "print a member of the distinguished tangle family");
    omega->add_option("kind", kind, "T_bracket_q, T_upper_p, T_lower_q, T_upper_pq, T_lower_pq, "
                                    "T_bracket_pq_inf, T_bracket_pq, T_zero_pq, T_prime")
        ->required();
    omega->add_option("--p", p, "twist parameter p");
    omega->add_option("--q", q, "twist parameter q");
    add_common(omega);

    auto* repro = app.add_subcommand("reproduce", "recompute every catalogued and constructed example");
    repro->add_option("--catalog", dir, "catalog directory");
    add_common(repro);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*det) return cmd_det(path, common);
        if (*tait) return cmd_tait(path, crossing);
        if (*cert) return cmd_certify(path, common);
        if (*props) return cmd_props(path, crossing, common);
        if (*repl) return cmd_replace(replace, common);
        if (*clos) return cmd_closure(path, mode, common);
        if (*omega) return cmd_omega(kind, p, q, common);
        if (*repro) return cmd_reproduce(dir, common);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_undecided;
    }
    return exit_usage;
}
