#include <doctest.h>

#include <map>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace figulat::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, Environment env = {}) {
    std::ostringstream out, err;
    const int code = run(args, out, err, env);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

// RFC 4180 subset: quoted cells with doubled quotes, no embedded newlines.
std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

using FieldMap = std::vector<std::pair<std::string, std::string>>;

std::vector<FieldMap> parse_csv(const std::string& text) {
    const auto ls = lines(text);
    std::vector<FieldMap> out;
    if (ls.empty()) return out;
    const auto header = split_csv(ls[0]);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto cells = split_csv(ls[i]);
        REQUIRE(cells.size() == header.size());
        FieldMap m;
        for (std::size_t c = 0; c < cells.size(); ++c) m.emplace_back(header[c], cells[c]);
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<FieldMap> parse_json_lines(const std::string& text) {
    std::vector<FieldMap> out;
    for (const auto& line : lines(text)) {
        const auto j = nlohmann::ordered_json::parse(line);
        FieldMap m;
        for (const auto& [key, value] : j.items()) {
            if (value.is_string()) {
                m.emplace_back(key, value.get<std::string>());
            } else if (value.is_boolean()) {
                m.emplace_back(key, value.get<bool>() ? "true" : "false");
            } else {
                m.emplace_back(key, value.dump());
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

TEST_CASE("range parsing") {
    CHECK(parse_range("3").lo == 3);
    CHECK(parse_range("3").hi == 3);
    CHECK(parse_range("1..4").hi == 4);
    CHECK_THROWS(parse_range("4..1"));
    CHECK_THROWS(parse_range("a..2"));
    CHECK_THROWS(parse_range("1..."));
    CHECK_THROWS(parse_range(""));
    CHECK_THROWS(parse_range("-1..2"));
}

TEST_CASE("verify exit codes") {
    CHECK(invoke({"verify", "--p", "1..4", "--n", "1..3", "--route", "algebraic"}).code == kExitOk);
    CHECK(invoke({"verify", "--p", "0..2", "--n", "1"}).code == kExitUsage);
    CHECK(invoke({"verify", "--p", "2", "--n", "2", "--route", "bogus"}).code == kExitUsage);
    CHECK(invoke({"verify", "--p", "2", "--n", "2", "--format", "xml"}).code == kExitUsage);
    CHECK(invoke({"verify", "--p", "2"}).code == kExitUsage);
    CHECK(invoke({"verify", "--p", "21", "--n", "2", "--route", "algebraic"}).code == kExitUsage);
    CHECK(invoke({"frobnicate"}).code == kExitUsage);
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"--help"}).code == kExitOk);

    const auto skipped =
        invoke({"verify", "--p", "3", "--n", "3", "--route", "pointwise", "--max-points", "5", "--format", "json-lines"});
    CHECK(skipped.code == kExitBudget);
    CHECK(skipped.out.find("\"status\":\"skipped\"") != std::string::npos);
}

TEST_CASE("verify record counts") {
    const auto r = invoke({"verify", "--p", "1..4", "--n", "1..3", "--route", "algebraic", "--format", "json-lines"});
    CHECK(lines(r.out).size() == 12);
    const auto all = invoke({"verify", "--p", "2..2", "--n", "2..2", "--route", "all", "--format", "json-lines"});
    CHECK(all.code == kExitOk);
    const auto recs = parse_json_lines(all.out);
    REQUIRE(recs.size() == 3);
    for (const auto& rec : recs) {
        CHECK(rec[0] == std::pair<std::string, std::string>{"schema_version", "1"});
        CHECK(std::find(rec.begin(), rec.end(), std::pair<std::string, std::string>{"ok", "true"}) != rec.end());
    }
    const auto some = invoke({"verify", "--p", "2", "--n", "2", "--route", "geometric,pointwise", "--format", "csv"});
    CHECK(parse_csv(some.out).size() == 2);
}

TEST_CASE("FIGULAT_MAX_POINTS overrides the default and --max-points overrides it") {
    Environment env;
    env.max_points = "5";
    const std::vector<std::string> args{"verify", "--p", "3", "--n", "3", "--route", "pointwise"};
    CHECK(invoke(args, env).code == kExitBudget);
    auto with_flag = args;
    with_flag.insert(with_flag.end(), {"--max-points", "100"});
    CHECK(invoke(with_flag, env).code == kExitOk);
    env.max_points = "lots";
    CHECK(invoke(args, env).code == kExitUsage);
}

TEST_CASE("csv and json-lines encode the same records") {
    for (const auto& base : std::vector<std::vector<std::string>>{
             {"verify", "--p", "1..4", "--n", "1..3", "--route", "all"},
             {"verify", "--p", "3", "--n", "3", "--route", "pointwise,algebraic", "--max-points", "5"},
             {"table", "--kind", "facet-counts", "--p", "1..5"},
             {"table", "--kind", "stirling", "--m", "0..6"},
             {"facets", "--p", "3", "--l", "1", "--with-surjections", "--with-counts", "4"},
             {"audit", "--m-max", "4", "--facet-p-max", "3", "--geometry-p-max", "3", "--geometry-n-max", "2"}}) {
        auto csv_args = base;
        csv_args.insert(csv_args.end(), {"--format", "csv"});
        auto json_args = base;
        json_args.insert(json_args.end(), {"--format", "json-lines"});
        const auto csv = invoke(csv_args);
        const auto json = invoke(json_args);
        CAPTURE(base[0]);
        CHECK(csv.code == json.code);
        const auto a = parse_csv(csv.out);
        const auto b = parse_json_lines(json.out);
        CHECK(!a.empty());
        CHECK(a == b);
    }
}

TEST_CASE("verify output is byte-identical across runs and thread counts") {
    const std::vector<std::string> args{"verify", "--p", "1..4", "--n", "1..3", "--route", "all", "--format", "json-lines"};
    const auto first = invoke(args);
    CHECK(first.out == invoke(args).out);
    auto threaded = args;
    threaded.insert(threaded.end(), {"--threads", "3"});
    CHECK(first.out == invoke(threaded).out);
}

TEST_CASE("table") {
    const auto fc = parse_csv(invoke({"table", "--kind", "facet-counts", "--p", "4", "--format", "csv"}).out);
    REQUIRE(fc.size() == 1);
    CHECK(fc[0] == FieldMap{{"schema_version", "1"}, {"p", "4"}, {"c(p,0)", "24"}, {"c(p,1)", "36"}, {"c(p,2)", "14"}, {"c(p,3)", "1"}});

    const auto st = parse_csv(invoke({"table", "--kind", "stirling", "--m", "4", "--format", "csv"}).out);
    REQUIRE(st.size() == 1);
    CHECK(st[0] == FieldMap{{"schema_version", "1"}, {"m", "4"}, {"S(m,1)", "1"}, {"S(m,2)", "7"}, {"S(m,3)", "6"}, {"S(m,4)", "1"}});

    const auto fg = parse_csv(invoke({"table", "--kind", "figurate", "--k", "2", "--n", "1..4", "--format", "csv"}).out);
    REQUIRE(fg.size() == 1);
    CHECK(fg[0] == FieldMap{{"schema_version", "1"}, {"k", "2"}, {"F^k_1", "1"}, {"F^k_2", "3"}, {"F^k_3", "6"}, {"F^k_4", "10"}});

    const auto tri = parse_csv(invoke({"table", "--kind", "facet-counts", "--p", "1..3", "--format", "csv"}).out);
    REQUIRE(tri.size() == 3);
    CHECK(tri[0][3] == std::pair<std::string, std::string>{"c(p,1)", ""});

    CHECK(invoke({"table", "--kind", "stirling"}).code == kExitUsage);
    CHECK(invoke({"table", "--kind", "nope", "--m", "3"}).code == kExitUsage);
    CHECK(invoke({"table", "--kind", "figurate", "--k", "0", "--n", "2"}).code == kExitUsage);
}

TEST_CASE("facets") {
    const auto diag = invoke({"facets", "--p", "2", "--l", "1", "--format", "csv"});
    CHECK(diag.code == kExitOk);
    const auto d = parse_csv(diag.out);
    REQUIRE(d.size() == 1);
    CHECK(d[0][1] == std::pair<std::string, std::string>{"facet", "{1,2}"});

    CHECK(parse_csv(invoke({"facets", "--p", "3", "--l", "0", "--format", "csv"}).out).size() == 6);
    const auto with = parse_csv(invoke({"facets", "--p", "3", "--l", "1", "--with-surjections", "--format", "csv"}).out);
    REQUIRE(with.size() == 6);
    CHECK(with[1][3] == std::pair<std::string, std::string>{"surjection", "[1,1,2]"});

    CHECK(invoke({"facets", "--p", "10", "--l", "0"}).code == kExitBudget);
    CHECK(invoke({"facets", "--p", "3", "--l", "3"}).code == kExitUsage);
    CHECK(invoke({"facets", "--p", "3", "--l", "0", "--max-expressions", "23"}).code == kExitBudget);
    CHECK(invoke({"facets", "--p", "3", "--l", "0", "--max-expressions", "24"}).code == kExitOk);
}

TEST_CASE("audit") {
    const auto r = invoke({"audit", "--m-max", "8", "--format", "csv"});
    CHECK(r.code == kExitOk);
    for (const auto& rec : parse_csv(r.out)) CHECK(rec[4] == std::pair<std::string, std::string>{"mismatches", "0"});
    CHECK(invoke({"audit", "--m-max", "x"}).code == kExitUsage);
    CHECK(invoke({"audit", "--m-max", "9"}).code == kExitBudget);
}

TEST_CASE("plain table alignment") {
    const auto out = invoke({"table", "--kind", "figurate", "--k", "1..2", "--n", "9..10"}).out;
    CHECK(out == "k  F^k_9  F^k_10\n1  9      10\n2  45     55\n");
}
