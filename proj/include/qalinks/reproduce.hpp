#pragma once

#include "qalinks/catalog.hpp"
#include "qalinks/qa.hpp"
#include "qalinks/tangle.hpp"

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace qalinks {

enum class RowStatus : std::uint8_t { Match, Mismatch, KnownDeviation };

std::string_view row_status_name(RowStatus s);

struct ReproRow {
    std::string subject;
    std::string quantity;
    std::string expected;
    std::string computed;
    std::string basis;  // where the expected value comes from
    RowStatus status = RowStatus::Match;
    std::string note;
};

struct ReproOptions {
    std::filesystem::path catalog_dir = default_catalog_dir();
    std::size_t budget = default_budget();
};

// Counts (x1, x2, x1e, x2e, y1, y2, y1e, y2e) as published for the seven
// tabulated members of the family.
std::array<long, 8> stated_counts(const OmegaKind& kind);

// The same counts for the tangle this library builds.  They differ from the
// published ones only for BracketPQInf at pq > 1, in x2 and x2e.
std::array<long, 8> realized_counts(const OmegaKind& kind);

// Every checked quantity, in a fixed order.
std::vector<ReproRow> reproduce(const ReproOptions& opt = {});

// No row is a plain mismatch.
bool all_rows_pass(const std::vector<ReproRow>& rows);

nlohmann::json to_json(const ReproRow& row);

}  // namespace qalinks
