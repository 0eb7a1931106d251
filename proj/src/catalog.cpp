#include "rado/catalog.hpp"

#include <fstream>

#include <json.hpp>

#include "rado/errors.hpp"

namespace rado {

std::string CatalogEntry::to_jsonl() const {
    nlohmann::json j;
    j["e0"] = e0;
    j["e1"] = e1;
    if (t)
        j["t"] = *t;
    if (q)
        j["q"] = *q;
    if (s)
        j["s"] = *s;
    j["value"] = value;
    j["status"] = status;
    if (witness_path)
        j["witness_path"] = *witness_path;
    j["elapsed_ms"] = elapsed_ms;
    j["decisions"] = decisions;
    j["propagations"] = propagations;
    j["conflicts"] = conflicts;
    j["tool_version"] = tool_version;
    return j.dump();
}

CatalogEntry CatalogEntry::from_jsonl(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad catalog line: ") + e.what());
    }
    CatalogEntry entry;
    try {
        entry.e0 = j.at("e0").get<std::string>();
        entry.e1 = j.at("e1").get<std::string>();
        if (j.contains("t"))
            entry.t = j["t"].get<Int>();
        if (j.contains("q"))
            entry.q = j["q"].get<Int>();
        if (j.contains("s"))
            entry.s = j["s"].get<Int>();
        entry.value = j.at("value").get<Int>();
        entry.status = j.at("status").get<std::string>();
        if (j.contains("witness_path"))
            entry.witness_path = j["witness_path"].get<std::string>();
        entry.elapsed_ms = j.at("elapsed_ms").get<Int>();
        entry.decisions = j.at("decisions").get<std::uint64_t>();
        entry.propagations = j.at("propagations").get<std::uint64_t>();
        entry.conflicts = j.at("conflicts").get<std::uint64_t>();
        entry.tool_version = j.at("tool_version").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad catalog line: ") + e.what());
    }
    return entry;
}

void Catalog::append(const CatalogEntry& entry) const {
    std::ofstream out(path_, std::ios::app | std::ios::binary);
    if (!out)
        throw IoError("cannot open catalog for append: " + path_.string());
    out << entry.to_jsonl() << '\n';
    if (!out)
        throw IoError("catalog write failed: " + path_.string());
}

std::vector<CatalogEntry> Catalog::load() const {
    std::vector<CatalogEntry> entries;
    std::ifstream in(path_, std::ios::binary);
    if (!in)
        return entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        entries.push_back(CatalogEntry::from_jsonl(line));
    }
    return entries;
}

bool Catalog::has_exact(const std::string& e0, const std::string& e1) const {
    return find_exact(e0, e1).has_value();
}

std::optional<CatalogEntry> Catalog::find_exact(const std::string& e0,
                                                const std::string& e1) const {
    for (const CatalogEntry& entry : load())
        if (entry.status == "exact" && entry.e0 == e0 && entry.e1 == e1)
            return entry;
    return std::nullopt;
}

namespace {

// Published small values of RR_t(q,s), reproduced verbatim, starred rows
// included. The (2,3,2) row exceeds the t(t+q)(t+s)+ms formula by one and
// is kept as published so the solver's finding stays a visible flag.
constexpr const char* kTable = "published table row";
constexpr const char* kStarred = "published table row; starred (bound from the interval formula is not tight)";
constexpr const char* kSuspect = "published table row; disagrees with the t(t+q)(t+s)+ms formula (43 vs 42)";
constexpr const char* kBelowBound =
    "published table row; sits below the t(t+q)(t+s)+ms lower bound (112 vs 113), likely a typo";

constexpr TableRow kTable1[] = {
    {2, 3, 2, 43, false, kSuspect},
    {2, 4, 2, 50, false, kTable},
    {2, 5, 2, 58, false, kTable},
    {2, 6, 2, 66, false, kTable},
    {2, 7, 2, 74, false, kTable},
    {2, 8, 2, 82, false, kTable},
    {2, 9, 2, 90, false, kTable},
    {2, 10, 2, 98, false, kTable},
    {2, 4, 3, 66, false, kTable},
    {2, 5, 3, 73, false, kTable},
    {2, 6, 3, 86, false, kTable},
    {2, 7, 3, 93, false, kTable},
    {2, 8, 3, 106, false, kTable},
    {2, 9, 3, 112, false, kBelowBound},
    {2, 10, 3, 126, false, kTable},
    {2, 5, 4, 88, false, kTable},
    {2, 6, 4, 100, false, kTable},
    {2, 7, 4, 112, false, kTable},
    {2, 8, 4, 124, false, kTable},
    {2, 9, 4, 136, false, kTable},
    {2, 10, 4, 148, false, kTable},
    {2, 6, 5, 122, false, kTable},
    {2, 7, 5, 131, false, kTable},
    {2, 8, 5, 150, false, kTable},
    {2, 9, 5, 159, false, kTable},
    {2, 10, 5, 178, false, kTable},
    {2, 7, 6, 150, false, kTable},
    {2, 8, 6, 166, false, kTable},
    {2, 9, 6, 182, false, kTable},
    {2, 10, 6, 198, false, kTable},
    {2, 8, 7, 194, false, kTable},
    {2, 9, 7, 205, false, kTable},
    {2, 10, 7, 230, false, kTable},
    {2, 9, 8, 228, false, kTable},
    {2, 10, 8, 248, false, kTable},
    {2, 10, 9, 282, false, kTable},
    {3, 4, 3, 129, false, kTable},
    {3, 5, 3, 147, false, kTable},
    {3, 6, 3, 165, false, kTable},
    {3, 7, 3, 192, true, kStarred},
    {3, 8, 3, 201, false, kTable},
    {3, 9, 3, 219, false, kTable},
    {3, 10, 3, 237, false, kTable},
    {3, 5, 4, 172, false, kTable},
    {3, 6, 4, 201, false, kTable},
    {3, 7, 4, 214, false, kTable},
    {3, 8, 4, 235, false, kTable},
    {3, 9, 4, 264, false, kTable},
    {3, 10, 4, 277, false, kTable},
    {3, 6, 5, 231, false, kTable},
    {3, 7, 5, 245, false, kTable},
    {3, 8, 5, 269, false, kTable},
    {3, 9, 5, 303, false, kTable},
    {3, 10, 5, 317, false, kTable},
    {3, 7, 6, 276, false, kTable},
    {3, 8, 6, 303, false, kTable},
    {3, 9, 6, 330, false, kTable},
    {3, 10, 6, 357, false, kTable},
    {3, 8, 7, 337, false, kTable},
    {3, 9, 7, 381, false, kTable},
    {3, 10, 7, 397, false, kTable},
    {3, 9, 8, 420, false, kTable},
    {3, 10, 8, 437, false, kTable},
    {3, 10, 9, 477, false, kTable},
    {4, 5, 4, 292, false, kTable},
    {4, 6, 4, 324, false, kTable},
    {4, 7, 4, 356, false, kTable},
    {4, 8, 4, 388, false, kTable},
    {4, 9, 4, 432, true, kStarred},
    {4, 10, 4, 452, false, kTable},
    {4, 6, 5, 370, false, kTable},
    {4, 7, 5, 401, false, kTable},
    {4, 8, 5, 452, false, kTable},
    {4, 9, 5, 473, false, kTable},
    {4, 10, 5, 514, false, kTable},
    {4, 7, 6, 446, false, kTable},
    {4, 8, 6, 492, false, kTable},
    {4, 9, 6, 526, false, kTable},
    {4, 10, 6, 566, false, kTable},
    {4, 8, 7, 556, false, kTable},
    {4, 9, 7, 579, false, kTable},
    {4, 10, 7, 630, false, kTable},
    {4, 9, 8, 632, false, kTable},
    {4, 10, 8, 680, false, kTable},
    {4, 10, 9, 746, false, kTable},
    {5, 11, 5, 820, true, kStarred},
};

} // namespace

std::span<const TableRow> table1() { return kTable1; }

std::optional<TableRow> table1_lookup(Int t, Int q, Int s) {
    for (const TableRow& row : kTable1)
        if (row.t == t && row.q == q && row.s == s)
            return row;
    return std::nullopt;
}

} // namespace rado
