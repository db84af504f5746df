#include "qalinks/catalog.hpp"
#include "qalinks/pdio.hpp"
#include "qalinks/reproduce.hpp"
#include "qalinks/tangle.hpp"

#include "support/random_diagrams.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace qalinks;
namespace fs = std::filesystem;

namespace {

// A scratch copy of the catalog, removed on scope exit.
class CatalogCopy {
public:
    CatalogCopy() : dir_(fs::temp_directory_path() / ("qalinks_catalog_" + std::to_string(::getpid()))) {
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        for (const auto& f : fs::directory_iterator(default_catalog_dir())) fs::copy(f.path(), dir_ / f.path().filename());
    }
    ~CatalogCopy() { fs::remove_all(dir_); }
    const fs::path& dir() const { return dir_; }

private:
    fs::path dir_;
};

void replace_in_file(const fs::path& file, const std::string& from, const std::string& to) {
    std::string text = read_text(file.string());
    const auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    text.replace(at, from.size(), to);
    std::ofstream(file) << text;
}

}  // namespace

TEST_CASE("PD text round-trips") {
    for (const auto& d : testing::random_connected_diagrams(50, 12, 17)) CHECK(parse_diagram(to_pd(d)) == d);
    for (const auto& e : load_catalog()) CHECK(parse_diagram(to_pd(e.diagram)) == e.diagram);
    for (auto f : omega_families()) {
        const auto t = make_omega({f, 2, 3});
        CHECK(parse_tangle(to_pd(t)) == t);
    }
    const Diagram loops{{}, 3, std::nullopt};
    CHECK(parse_diagram(to_pd(loops)) == loops);
}

TEST_CASE("JSON round-trips") {
    for (const auto& d : testing::random_connected_diagrams(20, 12, 19)) CHECK(diagram_from_json(to_json(d)) == d);
    const auto t = make_omega({OmegaFamily::BracketPQ, 2, 1});
    CHECK(tangle_from_json(to_json(t)) == t);
}

TEST_CASE("parsing") {
    CHECK(parse_diagram("") == Diagram::unknot());
    CHECK(parse_diagram("# just a comment\n") == Diagram::unknot());
    const auto d = parse_diagram("# @det 2\nX 0 1 2 3\nX 2 1 0 3 d0\nM 1\n");
    CHECK(d.size() == 2);
    CHECK(d.marked == std::size_t{1});
    const auto pd = parse_pd("# @det 2\n# @about two words\nX 1 2 3 4\n");
    CHECK(pd.meta.at("det") == "2");
    CHECK(pd.meta.at("about") == "two words");

    try {
        parse_pd("X 0 1 2 3\nX 0 1 two 3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_pd("Y 1 2 3 4\n"), ParseError);
    CHECK_THROWS_AS(parse_pd("X 1 2 3 4 d2\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("X 0 1 2 3\n"), ParseError);  // arcs do not pair up
    CHECK_THROWS_AS(parse_diagram("X 0 1 2 3\nX 2 1 0 3\nE 0 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_tangle("X 0 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(diagram_from_json(nlohmann::json{{"crossings", {{{"frame", {0, 1, 2}}}}}}), ParseError);
}

TEST_CASE("catalog") {
    const auto entries = load_catalog();
    CHECK(entries.size() >= 11);
    for (const auto& e : entries) {
        CAPTURE(e.name);
        CHECK(catalog_mismatches(e).empty());
        CHECK_FALSE(e.about.empty());
        CHECK((e.basis == "stated" || e.basis == "oracle"));
    }
    const auto k821 = catalog_entry("k8_21");
    CHECK(k821.expected_det == 15);
    REQUIRE(k821.expected_smoothings);
    CHECK(k821.expected_smoothings->first == 13);
    CHECK(k821.expected_smoothings->second == 2);
    CHECK_THROWS_AS(catalog_entry("no_such_knot"), CatalogError);
}

TEST_CASE("a corrupted catalog is caught") {
    CatalogCopy copy;
    replace_in_file(copy.dir() / "k8_21.pd", "# @det 15", "# @det 16");
    CHECK_THROWS_AS(load_catalog(copy.dir()), CatalogError);
    CHECK(load_catalog(copy.dir(), false).size() == load_catalog().size());

    ReproOptions opt;
    opt.catalog_dir = copy.dir();
    const auto rows = reproduce(opt);
    CHECK_FALSE(all_rows_pass(rows));
    const auto bad = std::find_if(rows.begin(), rows.end(), [](const ReproRow& r) { return r.status == RowStatus::Mismatch; });
    REQUIRE(bad != rows.end());
    CHECK(bad->subject == "k8_21");
    CHECK(bad->expected == "16");
    CHECK(bad->computed == "15");
}

TEST_CASE("reproduction table") {
    const auto rows = reproduce();
    CHECK(all_rows_pass(rows));
    std::size_t known = 0;
    for (const auto& r : rows) {
        if (r.status != RowStatus::KnownDeviation) continue;
        ++known;
        CHECK(r.subject.rfind("T_bracket_pq_inf", 0) == 0);
    }
    CHECK(known == 8);
    const auto j = to_json(rows.front());
    CHECK(j.contains("expected"));
    CHECK(j.contains("status"));
}

TEST_CASE("stated and realized counts") {
    CHECK(stated_counts({OmegaFamily::BracketQ, 1, 2}) == std::array<long, 8>{2, 2, 2, 1, 4, 0, 2, 0});
    CHECK(stated_counts({OmegaFamily::BracketPQInf, 1, 1}) == realized_counts({OmegaFamily::BracketPQInf, 1, 1}));
    CHECK(stated_counts({OmegaFamily::BracketPQInf, 2, 2}) != realized_counts({OmegaFamily::BracketPQInf, 2, 2}));
    CHECK_THROWS_AS(stated_counts({OmegaFamily::Prime, 1, 1}), std::invalid_argument);
}
