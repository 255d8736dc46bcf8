#include "records.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

namespace figulat::cli {

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "plain-table" || name == "table") return OutputFormat::PlainTable;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json-lines" || name == "jsonl") return OutputFormat::JsonLines;
    return std::nullopt;
}

std::string field_text(const Field& f) {
    struct Visitor {
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    };
    return std::visit(Visitor{}, f);
}

std::string csv_escape(std::string_view cell) {
    if (cell.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(cell);
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

namespace {

void render_csv(std::ostream& os, const std::vector<Record>& records) {
    if (records.empty()) return;
    os << "schema_version";
    for (const auto& [key, _] : records.front().fields) os << ',' << csv_escape(key);
    os << '\n';
    for (const auto& r : records) {
        os << kSchemaVersion;
        for (const auto& [_, value] : r.fields) os << ',' << csv_escape(field_text(value));
        os << '\n';
    }
}

void render_json_lines(std::ostream& os, const std::vector<Record>& records) {
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["schema_version"] = std::string(kSchemaVersion);
        for (const auto& [key, value] : r.fields) {
            std::visit([&](const auto& v) { j[key] = v; }, value);
        }
        os << j.dump() << '\n';
    }
}

void render_table(std::ostream& os, const std::vector<Record>& records) {
    if (records.empty()) return;
    const auto& head = records.front().fields;
    std::vector<std::size_t> width(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) width[c] = head[c].first.size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : records) {
        auto& row = cells.emplace_back();
        for (std::size_t c = 0; c < r.fields.size() && c < width.size(); ++c) {
            row.push_back(field_text(r.fields[c].second));
            width[c] = std::max(width[c], row.back().size());
        }
    }
    auto emit = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) line += "  ";
            line += row[c];
            if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
        }
        os << line << '\n';
    };
    std::vector<std::string> header;
    for (const auto& [key, _] : head) header.push_back(key);
    emit(header);
    for (const auto& row : cells) emit(row);
}

}  // namespace

void render(std::ostream& os, OutputFormat format, const std::vector<Record>& records) {
    switch (format) {
        case OutputFormat::PlainTable: render_table(os, records); break;
        case OutputFormat::Csv: render_csv(os, records); break;
        case OutputFormat::JsonLines: render_json_lines(os, records); break;
    }
}

}  // namespace figulat::cli
