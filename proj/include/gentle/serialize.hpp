// Serialization of reports, table entries, listings and structure-constant
// tables. JSON is the machine format of record; CSV and LaTeX mirror it for
// spreadsheet and visual diffing.
#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "gentle/homology.hpp"
#include "gentle/liecore.hpp"
#include "gentle/report.hpp"
#include "gentle/riedtmann.hpp"

namespace gentle {

using json = nlohmann::json;

inline json to_json(const CheckEntry& e) {
    return json{{"check_id", e.check_id},
                {"instance", e.instance},
                {"expected", e.expected},
                {"computed", e.computed},
                {"status", status_str(e.status)}};
}

inline json to_json(const CheckReport& r) {
    json a = json::array();
    for (const auto& e : r.entries) a.push_back(to_json(e));
    return a;
}

// {basis: [labels], brackets: [{i, j, terms: [{k, num, den}]}]}, i < j only.
inline json to_json(const LieAlgebra& L) {
    json basis = json::array();
    for (const auto& l : L.labels()) basis.push_back(l);
    json brackets = json::array();
    for (const auto& [ij, e] : L.table()) {
        json terms = json::array();
        for (const auto& [k, c] : e.terms)
            terms.push_back(json{{"k", k}, {"num", to_string(num(c))}, {"den", to_string(den(c))}});
        brackets.push_back(json{{"i", ij.first}, {"j", ij.second}, {"terms", terms}});
    }
    return json{{"basis", basis}, {"brackets", brackets}};
}

inline json coeffs_json(const Poly& p) {
    json a = json::array();
    for (const auto& c : p.c) a.push_back(to_string(c));
    if (a.empty()) a.push_back("0");
    return a;
}

// {col_type, row_type, numerator_coeffs, denominator_coeffs, value_at_1_num, value_at_1_den}
inline json to_json(const TableEntry& e) {
    return json{{"col_type", e.col.str()},
                {"row_type", e.row.str()},
                {"numerator_coeffs", coeffs_json(e.series.num)},
                {"denominator_coeffs", coeffs_json(e.series.den)},
                {"value_at_1_num", to_string(num(e.at_one))},
                {"value_at_1_den", to_string(den(e.at_one))},
                {"matches_case_series", e.match_series},
                {"matches_case_value", e.match_at_one}};
}

inline std::string table_csv(const TableResult& t, int which) {
    std::ostringstream os;
    os << "row_type,col_type," << (which == 1 ? "series,numerator_coeffs,denominator_coeffs" : "value_at_1")
       << ",matches_case_law\n";
    for (const auto& e : t.entries) {
        os << e.row.str() << "," << e.col.str() << ",";
        if (which == 1) {
            os << "\"" << e.series.str() << "\",\"";
            for (size_t k = 0; k < e.series.num.c.size(); ++k) os << (k ? " " : "") << e.series.num.c[k];
            os << "\",\"";
            for (size_t k = 0; k < e.series.den.c.size(); ++k) os << (k ? " " : "") << e.series.den.c[k];
            os << "\"," << (e.match_series ? "yes" : "no");
        } else {
            os << to_string(e.at_one) << "," << (e.match_at_one ? "yes" : "no");
        }
        os << "\n";
    }
    return os.str();
}

// Full matrix layout: one tabular, rows and columns in block order
// (U with k<=l<n, U with l<k, U with l=n, V, W).
inline std::vector<IndecType> table_layout_order(int n) {
    std::vector<IndecType> order;
    for (int l = 1; l < n; ++l)
        for (int k = 1; k <= l; ++k) order.push_back(IndecType::U(l, k));
    for (int l = 1; l <= n; ++l)
        for (int k = l + 1; k <= n; ++k) order.push_back(IndecType::U(l, k));
    for (int k = 1; k <= n; ++k) order.push_back(IndecType::U(n, k));
    for (int i = 1; i <= n; ++i) order.push_back(IndecType::V(i));
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j) order.push_back(IndecType::W(i, j));
    return order;
}

inline std::string table_latex(const TableResult& t, int which) {
    std::vector<IndecType> order = table_layout_order(t.n);
    std::map<std::pair<IndecType, IndecType>, const TableEntry*> at;
    for (const auto& e : t.entries) at[{e.row, e.col}] = &e;
    std::ostringstream os;
    os << "% <M,N>_" << (which == 1 ? "t" : "1") << ", row = M, column = N, rank n = " << t.n << "\n";
    os << "\\begin{tabular}{c|";
    for (size_t c = 0; c < order.size(); ++c) os << "c";
    os << "}\n";
    for (const auto& c : order) os << " & $" << c.str() << "$";
    os << " \\\\\\hline\n";
    for (const auto& r : order) {
        os << "$" << r.str() << "$";
        for (const auto& c : order) {
            const TableEntry* e = at.at({r, c});
            os << " & $" << (which == 1 ? e->series.str() : to_string(e->at_one)) << "$";
        }
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

struct IndecListing {
    IndecType type;
    DimVector dims;
    Root root;
};

inline std::vector<IndecListing> indec_listing(int n) {
    std::vector<IndecListing> out;
    for (const IndecType& t : all_indecomposables(n))
        out.push_back({t, dim_vector(t, n), gabriel_root(t, n)});
    return out;
}

inline json to_json(const IndecListing& l) {
    return json{{"type", l.type.str()}, {"dim_vector", l.dims}, {"gabriel_root", l.root.coeffs}};
}

}  // namespace gentle
