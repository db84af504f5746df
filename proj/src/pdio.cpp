#include "qalinks/pdio.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

namespace qalinks {

ParseError::ParseError(int l, const std::string& what)
    : std::runtime_error(l > 0 ? "line " + std::to_string(l) + ": " + what : what), line(l) {}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

int to_int(const std::string& token, int line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + token + "'");
    }
}

std::array<int, 4> four_ints(const std::vector<std::string>& tokens, int line) {
    if (tokens.size() < 5) throw ParseError(line, "expected four arc ids");
    return {to_int(tokens[1], line), to_int(tokens[2], line), to_int(tokens[3], line), to_int(tokens[4], line)};
}

std::string over_name(Over o) { return o == Over::NwSe ? "d0" : "d1"; }

void write_meta(std::ostringstream& out, const std::map<std::string, std::string>& meta) {
    for (const auto& [k, v] : meta) out << "# @" << k << ' ' << v << '\n';
}

void write_crossings(std::ostringstream& out, const std::vector<Crossing>& crossings) {
    for (const auto& c : crossings)
        out << "X " << c.frame[0] << ' ' << c.frame[1] << ' ' << c.frame[2] << ' ' << c.frame[3] << ' '
            << over_name(c.over) << '\n';
}

}  // namespace

PdFile parse_pd(std::string_view text) {
    PdFile file;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string body = raw;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            const std::string comment = trim(std::string_view(raw).substr(hash + 1));
            if (!comment.empty() && comment[0] == '@') {
                const auto space = comment.find_first_of(" \t");
                const std::string key = comment.substr(1, space == std::string::npos ? std::string::npos : space - 1);
                file.meta[key] = space == std::string::npos ? "" : trim(std::string_view(comment).substr(space));
            }
            body = raw.substr(0, hash);
        }
        std::istringstream words(body);
        std::vector<std::string> tokens{std::istream_iterator<std::string>(words), {}};
        if (tokens.empty()) continue;
        const std::string& tag = tokens[0];
        if (tag == "X") {
            if (tokens.size() > 6) throw ParseError(line, "too many fields in crossing");
            Crossing c{four_ints(tokens, line), Over::NwSe};
            if (tokens.size() == 6) {
                if (tokens[5] == "d1")
                    c.over = Over::NeSw;
                else if (tokens[5] != "d0")
                    throw ParseError(line, "over diagonal must be d0 or d1");
            }
            file.crossings.push_back(c);
        } else if (tag == "O") {
            if (tokens.size() != 2) throw ParseError(line, "expected 'O n'");
            const int n = to_int(tokens[1], line);
            if (n < 0) throw ParseError(line, "negative loop count");
            file.free_loops = n;
        } else if (tag == "M") {
            if (tokens.size() != 2) throw ParseError(line, "expected 'M k'");
            const int k = to_int(tokens[1], line);
            if (k < 0) throw ParseError(line, "negative crossing index");
            file.marked = static_cast<std::size_t>(k);
        } else if (tag == "E") {
            if (tokens.size() != 5) throw ParseError(line, "expected 'E nw ne se sw'");
            file.endpoints = four_ints(tokens, line);
        } else {
            throw ParseError(line, "unknown record '" + tag + "'");
        }
    }
    return file;
}

Diagram parse_diagram(std::string_view text) {
    const PdFile f = parse_pd(text);
    if (f.is_tangle()) throw ParseError(0, "expected a diagram, found tangle endpoints");
    Diagram d{f.crossings, 0, f.marked};
    d.free_loops = f.free_loops.value_or(f.crossings.empty() ? 1 : 0);
    try {
        validate(d);
    } catch (const std::exception& e) {
        throw ParseError(0, e.what());
    }
    return d;
}

TangleDiagram parse_tangle(std::string_view text) {
    const PdFile f = parse_pd(text);
    if (!f.is_tangle()) throw ParseError(0, "expected a tangle: missing 'E' endpoint line");
    TangleDiagram t{f.crossings, *f.endpoints, f.free_loops.value_or(0), f.marked};
    try {
        validate(t);
    } catch (const std::exception& e) {
        throw ParseError(0, e.what());
    }
    return t;
}

std::string to_pd(const Diagram& d, const std::map<std::string, std::string>& meta) {
    std::ostringstream out;
    write_meta(out, meta);
    write_crossings(out, d.crossings);
    if (d.free_loops > 0 || d.crossings.empty()) out << "O " << d.free_loops << '\n';
    if (d.marked) out << "M " << *d.marked << '\n';
    return out.str();
}

std::string to_pd(const TangleDiagram& t, const std::map<std::string, std::string>& meta) {
    std::ostringstream out;
    write_meta(out, meta);
    write_crossings(out, t.crossings);
    out << "E " << t.endpoints[0] << ' ' << t.endpoints[1] << ' ' << t.endpoints[2] << ' ' << t.endpoints[3]
        << '\n';
    if (t.free_loops > 0) out << "O " << t.free_loops << '\n';
    if (t.marked) out << "M " << *t.marked << '\n';
    return out.str();
}

std::string read_text(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

// ---------------------------------------------------------------------------
// JSON mirror

namespace {

nlohmann::json crossings_json(const std::vector<Crossing>& crossings) {
    auto arr = nlohmann::json::array();
    for (const auto& c : crossings) arr.push_back({{"frame", c.frame}, {"over", over_name(c.over)}});
    return arr;
}

std::vector<Crossing> crossings_from(const nlohmann::json& j) {
    std::vector<Crossing> out;
    for (const auto& c : j.at("crossings")) {
        Crossing x{c.at("frame").get<std::array<int, 4>>(), Over::NwSe};
        const auto over = c.value("over", std::string("d0"));
        if (over == "d1")
            x.over = Over::NeSw;
        else if (over != "d0")
            throw ParseError(0, "over diagonal must be d0 or d1");
        out.push_back(x);
    }
    return out;
}

std::optional<std::size_t> marked_from(const nlohmann::json& j) {
    if (!j.contains("marked") || j.at("marked").is_null()) return std::nullopt;
    return j.at("marked").get<std::size_t>();
}

}  // namespace

nlohmann::json to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

nlohmann::json to_json(const Diagram& d) {
    return {{"crossings", crossings_json(d.crossings)},
            {"free_loops", d.free_loops},
            {"marked", d.marked ? nlohmann::json(*d.marked) : nlohmann::json(nullptr)}};
}

nlohmann::json to_json(const TangleDiagram& t) {
    return {{"crossings", crossings_json(t.crossings)},
            {"endpoints", t.endpoints},
            {"free_loops", t.free_loops},
            {"marked", t.marked ? nlohmann::json(*t.marked) : nlohmann::json(nullptr)}};
}

nlohmann::json to_json(const SignedPlaneGraph& g) {
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"sign", e.sign}, {"crossing", e.crossing}});
    nlohmann::json out{{"vertices", g.vertex_count}, {"edges", edges}};
    out["marked_edge"] = g.marked_edge ? nlohmann::json(*g.marked_edge) : nlohmann::json(nullptr);
    out["boundary_pair"] = g.boundary_pair ? nlohmann::json{g.boundary_pair->first, g.boundary_pair->second}
                                           : nlohmann::json(nullptr);
    return out;
}

nlohmann::json to_json(const TreePolynomial& p) {
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs) arr.push_back(to_json(c));
    return arr;
}

Diagram diagram_from_json(const nlohmann::json& j) {
    try {
        Diagram d{crossings_from(j), j.value("free_loops", 0), marked_from(j)};
        validate(d);
        return d;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(0, e.what());
    }
}

TangleDiagram tangle_from_json(const nlohmann::json& j) {
    try {
        TangleDiagram t{crossings_from(j), j.at("endpoints").get<std::array<int, 4>>(), j.value("free_loops", 0),
                        marked_from(j)};
        validate(t);
        return t;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(0, e.what());
    }
}

}  // namespace qalinks
