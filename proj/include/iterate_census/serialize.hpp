#pragma once

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "asymptotics.hpp"
#include "census.hpp"
#include "iterate_tree.hpp"
#include "tableau.hpp"

namespace iterate_census {

using Json = nlohmann::ordered_json;

/// Shortest decimal form that reads back to the same double.
inline std::string format_double(double v) {
    char buf[32];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

inline Json iterates_json(const std::vector<IterateTree>& trees) {
    Json out = Json::array();
    for (std::size_t i = 0; i < trees.size(); ++i) {
        out.push_back({{"index", i + 1}, {"code", trees[i].code_string()}, {"word", trees[i].word()}});
    }
    return out;
}

inline std::string iterates_csv(const std::vector<IterateTree>& trees) {
    std::ostringstream os;
    os << "index,code,word\n";
    for (std::size_t i = 0; i < trees.size(); ++i) {
        os << i + 1 << ',' << trees[i].code_string() << ',' << trees[i].word("*") << '\n';
    }
    return os.str();
}

inline Json tableau_json(const Tableau& t) {
    Json lines = Json::array();
    for (const Line& line : t.lines()) {
        Json codes = Json::array();
        for (IterateTree member : line.members) codes.push_back(member.code_string());
        lines.push_back(std::move(codes));
    }
    return {{"n", t.order()}, {"kind", std::string(kind_name(t.kind()))}, {"lines", std::move(lines)}};
}

/// Line contents as code strings, read back from tableau JSON.
inline std::vector<std::vector<IterateTree>> tableau_lines_from_json(const Json& j) {
    std::vector<std::vector<IterateTree>> lines;
    for (const auto& line : j.at("lines")) {
        auto& out = lines.emplace_back();
        for (const auto& code : line) out.push_back(IterateTree::from_code(code.get<std::string>()));
    }
    return lines;
}

inline std::string matrix_csv(const std::vector<std::vector<int>>& m) {
    std::ostringstream os;
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? "," : "") << 'J' << j + 1;
    os << '\n';
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
        os << '\n';
    }
    return os.str();
}

inline Json matrix_json(int n, TableauKind kind, const std::vector<std::vector<int>>& m) {
    return {{"n", n}, {"kind", std::string(kind_name(kind))}, {"matrix", m}};
}

inline Json census_json(const CensusReport& r) {
    auto row = [](const std::map<int, BigNat>& values) {
        Json o = Json::object();
        for (const auto& [k, v] : values) o[std::to_string(k)] = v.str();
        return o;
    };
    const std::string method(provenance_name(r.method));
    return {{"n", r.n},
            {"S_n", r.catalan_n.str()},
            {"T_A", row(r.t_a)},
            {"T_AB", row(r.t_ab)},
            {"I_A", r.reducible_a.str()},
            {"I_AB", r.reducible_ab.str()},
            {"method", {{"S_n", "closed"}, {"T_A", method}, {"T_AB", method}, {"I_A", method}, {"I_AB", method}}}};
}

inline CensusReport census_from_json(const Json& j) {
    CensusReport r;
    r.n = j.at("n").get<int>();
    r.catalan_n = BigNat::from_string(j.at("S_n").get<std::string>());
    for (const auto& [k, v] : j.at("T_A").items()) r.t_a.emplace(std::stoi(k), BigNat::from_string(v.get<std::string>()));
    for (const auto& [k, v] : j.at("T_AB").items()) r.t_ab.emplace(std::stoi(k), BigNat::from_string(v.get<std::string>()));
    r.reducible_a = BigNat::from_string(j.at("I_A").get<std::string>());
    r.reducible_ab = BigNat::from_string(j.at("I_AB").get<std::string>());
    const auto method = j.at("method").at("I_AB").get<std::string>();
    r.method = method == "brute" ? Provenance::Brute
             : method == "closed" ? Provenance::Closed
                                  : Provenance::BothAgree;
    return r;
}

inline constexpr const char* kCensusCsvHeader = "n,S_n,I_A,I_AB,irreducible_A,irreducible_AB";

inline std::string census_csv_row(const CensusReport& r) {
    std::ostringstream os;
    os << r.n << ',' << r.catalan_n << ',' << r.reducible_a << ',' << r.reducible_ab << ','
       << r.irreducible_a() << ',' << r.irreducible_ab();
    return os.str();
}

inline std::string census_text(const CensusReport& r) {
    std::ostringstream os;
    os << "n = " << r.n << "  (method: " << provenance_name(r.method) << ")\n"
       << "S_n            = " << r.catalan_n << '\n';
    os << "T_A  (k: count)";
    for (const auto& [k, v] : r.t_a) os << "  " << k << ':' << v;
    os << "\nT_AB (k: count)";
    for (const auto& [k, v] : r.t_ab) os << "  " << k << ':' << v;
    os << "\nI_A            = " << r.reducible_a << '\n'
       << "I_AB           = " << r.reducible_ab << '\n'
       << "irreducible_A  = " << r.irreducible_a() << '\n'
       << "irreducible_AB = " << r.irreducible_ab() << '\n';
    return os.str();
}

inline constexpr const char* kAsymptoticCsvHeader =
    "n,exact_ratio,estimate_ratio,irreducible_exact_ratio,theorem_bound_ratio";

inline std::string asymptotic_csv_row(const AsymptoticRow& row) {
    return std::to_string(row.n) + ',' + format_double(row.exact_ratio) + ',' +
           format_double(row.estimate_ratio) + ',' + format_double(row.irreducible_exact_ratio) +
           ',' + format_double(row.theorem_bound_ratio);
}

inline Json asymptotic_json(const AsymptoticRow& row) {
    return {{"n", row.n},
            {"exact_ratio", row.exact_ratio},
            {"estimate_ratio", row.estimate_ratio},
            {"irreducible_exact_ratio", row.irreducible_exact_ratio},
            {"theorem_bound_ratio", row.theorem_bound_ratio}};
}

/// Two whitespace-separated columns (n, exact ratio) for gnuplot.
inline std::string asymptotic_gnuplot_row(const AsymptoticRow& row) {
    return std::to_string(row.n) + ' ' + format_double(row.exact_ratio);
}

}  // namespace iterate_census
