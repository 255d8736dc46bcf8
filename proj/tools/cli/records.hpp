#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace figulat::cli {

enum class OutputFormat { PlainTable, Csv, JsonLines };

std::optional<OutputFormat> parse_format(std::string_view name);

// Exact big integers travel as decimal strings so that no consumer ever
// rounds them through a double.
using Field = std::variant<std::string, std::int64_t, bool>;

inline constexpr std::string_view kSchemaVersion = "1";

struct Record {
    std::vector<std::pair<std::string, Field>> fields;

    Record& add(std::string key, Field value) {
        fields.emplace_back(std::move(key), std::move(value));
        return *this;
    }
};

// Text of a field as it appears in csv and plain tables.
std::string field_text(const Field& f);

// Writes a homogeneous list of records. csv and json-lines both carry a
// leading schema_version column; the plain table omits it. The column set is
// taken from the first record.
void render(std::ostream& os, OutputFormat format, const std::vector<Record>& records);

std::string csv_escape(std::string_view cell);

}  // namespace figulat::cli
