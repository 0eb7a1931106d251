#ifndef RADO_CATALOG_HPP
#define RADO_CATALOG_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rado/checked.hpp"

namespace rado {

inline constexpr const char* kToolVersion = "rado 0.1.0";

/// One persisted (equation pair -> value/bound) record. Serialized as one
/// JSON object per line; absent optionals are omitted, not null.
struct CatalogEntry {
    std::string e0;
    std::string e1;
    std::optional<Int> t, q, s; // present when the pair is F-form
    Int value = 0;
    std::string status; // exact | lower_bound | upper_bound | indeterminate
    std::optional<std::string> witness_path;
    Int elapsed_ms = 0;
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t conflicts = 0;
    std::string tool_version = kToolVersion;

    std::string to_jsonl() const;
    static CatalogEntry from_jsonl(const std::string& line);
};

/// Append-only JSONL results file.
class Catalog {
  public:
    explicit Catalog(std::filesystem::path path) : path_(std::move(path)) {}

    const std::filesystem::path& path() const { return path_; }
    void append(const CatalogEntry& entry) const;
    std::vector<CatalogEntry> load() const; // empty when the file is absent

    /// True when an exact entry for this equation pair is already recorded.
    bool has_exact(const std::string& e0, const std::string& e1) const;
    std::optional<CatalogEntry> find_exact(const std::string& e0, const std::string& e1) const;

  private:
    std::filesystem::path path_;
};

/// One published table row; `starred` marks the rows whose lower bound
/// beats the interval-construction formula.
struct TableRow {
    Int t, q, s, value;
    bool starred;
    const char* note;
};

std::span<const TableRow> table1();
std::optional<TableRow> table1_lookup(Int t, Int q, Int s);

} // namespace rado

#endif
