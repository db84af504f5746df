#include "qalinks/catalog.hpp"

#include "qalinks/pdio.hpp"
#include "qalinks/taitgraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#ifndef QALINKS_CATALOG_DIR
#define QALINKS_CATALOG_DIR "catalog"
#endif

namespace qalinks {

namespace fs = std::filesystem;

fs::path default_catalog_dir() {
    if (const char* env = std::getenv("QALINKS_CATALOG_DIR"); env && *env) return env;
    return QALINKS_CATALOG_DIR;
}

namespace {

Integer parse_integer(const std::string& text, const fs::path& file) {
    try {
        return Integer(text);
    } catch (const std::exception&) {
        throw CatalogError(file.string() + ": bad integer '" + text + "'");
    }
}

}  // namespace

CatalogEntry read_catalog_entry(const fs::path& file) {
    const std::string text = read_text(file.string());
    const PdFile pd = parse_pd(text);
    CatalogEntry entry;
    entry.name = file.stem().string();
    entry.path = file;
    entry.diagram = parse_diagram(text);
    const auto det = pd.meta.find("det");
    if (det == pd.meta.end()) throw CatalogError(file.string() + ": missing '# @det'");
    entry.expected_det = parse_integer(det->second, file);
    if (const auto s = pd.meta.find("smoothings"); s != pd.meta.end()) {
        std::istringstream words(s->second);
        std::string zero, infinity;
        if (!(words >> zero >> infinity)) throw CatalogError(file.string() + ": '# @smoothings' needs two values");
        entry.expected_smoothings = std::pair{parse_integer(zero, file), parse_integer(infinity, file)};
        if (!entry.diagram.marked) throw CatalogError(file.string() + ": smoothings given without a marked crossing");
    }
    if (const auto b = pd.meta.find("basis"); b != pd.meta.end()) entry.basis = b->second;
    if (const auto a = pd.meta.find("about"); a != pd.meta.end()) entry.about = a->second;
    return entry;
}

std::vector<std::string> catalog_mismatches(const CatalogEntry& entry) {
    std::vector<std::string> out;
    const auto expect = [&](const std::string& what, const Integer& want, const Integer& got) {
        if (want != got) out.push_back(what + " is " + got.str() + ", recorded " + want.str());
    };
    expect("det", entry.expected_det, determinant(entry.diagram));
    if (entry.expected_smoothings) {
        const std::size_t c = *entry.diagram.marked;
        expect("det(L_0)", entry.expected_smoothings->first, determinant(smooth(entry.diagram, c, Smoothing::Zero)));
        expect("det(L_inf)", entry.expected_smoothings->second,
               determinant(smooth(entry.diagram, c, Smoothing::Infinity)));
    }
    return out;
}

std::vector<CatalogEntry> load_catalog(const fs::path& dir, bool strict) {
    if (!fs::is_directory(dir)) throw CatalogError("catalog directory not found: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& item : fs::directory_iterator(dir))
        if (item.is_regular_file() && item.path().extension() == ".pd") files.push_back(item.path());
    std::sort(files.begin(), files.end());
    std::vector<CatalogEntry> out;
    for (const auto& file : files) {
        out.push_back(read_catalog_entry(file));
        if (!strict) continue;
        if (const auto bad = catalog_mismatches(out.back()); !bad.empty())
            throw CatalogError(file.string() + ": " + bad.front());
    }
    return out;
}

CatalogEntry catalog_entry(const std::string& name) {
    const fs::path file = default_catalog_dir() / (name + ".pd");
    if (!fs::exists(file)) throw CatalogError("no catalog entry named " + name);
    auto entry = read_catalog_entry(file);
    if (const auto bad = catalog_mismatches(entry); !bad.empty())
        throw CatalogError(file.string() + ": " + bad.front());
    return entry;
}

}  // namespace qalinks
