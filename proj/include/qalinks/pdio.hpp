#pragma once

#include "qalinks/diagram.hpp"
#include "qalinks/tangle.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace qalinks {

// Text format, one record per line:
//   X nw ne se sw [d0|d1]   crossing (d0: the NW-SE strand is over; default)
//   O n                     n crossingless circles
//   M k                     marked crossing (0-based)
//   E nw ne se sw           tangle endpoints
//   # @key value            metadata; any other text after # is a comment
// A file with no records is the unknot.
struct PdFile {
    std::vector<Crossing> crossings;
    std::optional<int> free_loops;
    std::optional<std::size_t> marked;
    std::optional<std::array<int, 4>> endpoints;
    std::map<std::string, std::string> meta;

    bool is_tangle() const { return endpoints.has_value(); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line;
};

PdFile parse_pd(std::string_view text);

// Throws ParseError if the text describes a tangle or fails validation.
Diagram parse_diagram(std::string_view text);
TangleDiagram parse_tangle(std::string_view text);

std::string to_pd(const Diagram& d, const std::map<std::string, std::string>& meta = {});
std::string to_pd(const TangleDiagram& t, const std::map<std::string, std::string>& meta = {});

// Reads a file, or standard input for "-".
std::string read_text(const std::string& path);

nlohmann::json to_json(const Diagram& d);
nlohmann::json to_json(const TangleDiagram& t);
nlohmann::json to_json(const SignedPlaneGraph& g);
nlohmann::json to_json(const TreePolynomial& p);

// A JSON number when it fits in 64 bits, otherwise a decimal string.
nlohmann::json to_json(const Integer& v);

Diagram diagram_from_json(const nlohmann::json& j);
TangleDiagram tangle_from_json(const nlohmann::json& j);

}  // namespace qalinks
