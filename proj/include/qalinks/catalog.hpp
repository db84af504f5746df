#pragma once

#include "qalinks/diagram.hpp"
#include "qalinks/integer.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qalinks {

// A shipped example diagram with the determinants it is known to have.
//
// Metadata lines in the .pd file:
//   # @det 15              expected determinant
//   # @smoothings 13 2     expected det(L_0), det(L_inf) at the marked crossing
//   # @basis stated        "stated" (quoted value) or "oracle" (computed once and frozen)
//   # @about ...           free text
struct CatalogEntry {
    std::string name;
    std::filesystem::path path;
    Diagram diagram;
    Integer expected_det;
    std::optional<std::pair<Integer, Integer>> expected_smoothings;
    std::string basis;
    std::string about;

    std::optional<std::size_t> marked() const { return diagram.marked; }
};

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// QALINKS_CATALOG_DIR from the environment, else the source tree's catalog.
std::filesystem::path default_catalog_dir();

// Parses one entry without checking its determinant.
CatalogEntry read_catalog_entry(const std::filesystem::path& file);

// Problems with an entry's recorded determinants, empty when consistent.
std::vector<std::string> catalog_mismatches(const CatalogEntry& entry);

// Every *.pd file of dir, sorted by name.  With `strict`, throws
// CatalogError on the first entry whose determinants disagree.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir = default_catalog_dir(), bool strict = true);

// The named entry of the default catalog; throws CatalogError if absent.
CatalogEntry catalog_entry(const std::string& name);

}  // namespace qalinks
