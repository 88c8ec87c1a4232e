#include "ym/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ym::io {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double number_at(const json& node, const std::string& where) {
    if (!node.is_number())
        throw ParseError(where + ": expected a number");
    const double v = node.get<double>();
    if (!std::isfinite(v))
        throw ParseError(where + ": entries must be finite");
    return v;
}

MatR matrix_at(const json& node, const std::string& name, int expect_rows) {
    if (!node.is_array() || node.empty())
        throw ParseError(name + ": expected a non-empty array of rows");
    const int rows = static_cast<int>(node.size());
    if (expect_rows > 0 && rows != expect_rows)
        throw ParseError(name + ": row count " + std::to_string(rows) +
                         " does not match n = " + std::to_string(expect_rows));
    MatR m(rows, 3);
    for (int r = 0; r < rows; ++r) {
        const json& row = node[static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != 3)
            throw ParseError(name + "[" + std::to_string(r) + "]: expected exactly 3 entries");
        for (int c = 0; c < 3; ++c)
            m(r, c) = number_at(row[static_cast<std::size_t>(c)],
                                name + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    return m;
}

InputDocument parse_structured(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("document: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("document: expected a top-level object");
    if (!doc.contains("J"))
        throw ParseError("J: required field is missing");

    int n = 0;
    if (doc.contains("n")) {
        if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
            throw ParseError("n: expected a positive integer");
        n = doc["n"].get<int>();
    }

    InputDocument in;
    in.J = matrix_at(doc["J"], "J", n);
    in.n = in.J.rows();
    if (doc.contains("A")) in.A = matrix_at(doc["A"], "A", in.n);
    return in;
}

InputDocument parse_csv(const std::string& text) {
    InputDocument in;
    std::vector<std::array<double, 3>> rows;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::array<double, 3> row{};
        std::istringstream fields(line);
        std::string field;
        int c = 0;
        while (std::getline(fields, field, ',')) {
            if (c >= 3)
                throw ParseError("line " + std::to_string(lineno) + ": expected 3 comma-separated values");
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(field, &used);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ", column " +
                                 std::to_string(c + 1) + ": not a number");
            }
            while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used])))
                ++used;
            if (used != field.size())
                throw ParseError("line " + std::to_string(lineno) + ", column " +
                                 std::to_string(c + 1) + ": trailing characters");
            if (!std::isfinite(v))
                throw ParseError("line " + std::to_string(lineno) + ", column " +
                                 std::to_string(c + 1) + ": entries must be finite");
            row[static_cast<std::size_t>(c++)] = v;
        }
        if (c != 3)
            throw ParseError("line " + std::to_string(lineno) + ": expected 3 comma-separated values");
        rows.push_back(row);
    }
    if (rows.empty())
        throw ParseError("document: no rows found");
    in.n = static_cast<int>(rows.size());
    in.J = MatR(in.n, 3);
    for (int r = 0; r < in.n; ++r)
        for (int c = 0; c < 3; ++c) in.J(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return in;
}

json matrix_json(const MatR& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

json tolerances_json(const Tolerances& tol) {
    return json{{"orth_rel", tol.orth_rel}, {"svd_rel", tol.svd_rel},
                {"alg_abs", tol.alg_abs},   {"res_rel", tol.res_rel},
                {"tie_rel", tol.tie_rel},   {"zero_rel", tol.zero_rel},
                {"gate_rel", tol.gate_rel}};
}

std::string expected_count(const solver::Classification& cls) {
    using cubic::CaseLabel;
    switch (cls.label) {
        case CaseLabel::ZeroCurrent: return "one-parameter family plus the zero potential";
        case CaseLabel::Rank1NoSolution: return "0";
        case CaseLabel::Rank2Unique: return "1";
        case CaseLabel::AllEqual: return "1";
        case CaseLabel::TwoLargeEqual:
        case CaseLabel::TwoSmallEqual:
        case CaseLabel::AllDistinct: return "2";
        case CaseLabel::DimensionOne:
            return cls.rank == 0 ? "one-parameter family plus the zero potential" : "0";
    }
    return "?";
}

} // namespace

InputDocument parse_document(const std::string& text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw ParseError("document: input is empty");
    return text[first] == '{' ? parse_structured(text) : parse_csv(text);
}

ReportFormat parse_format(const std::string& name) {
    if (name == "structured") return ReportFormat::Structured;
    if (name == "csv") return ReportFormat::Csv;
    throw ParseError("format: expected 'structured' or 'csv'");
}

std::string render_solution(const solver::SolutionReport& rep, const Tolerances& tol,
                            ReportFormat fmt) {
    if (fmt == ReportFormat::Structured) {
        json out;
        out["n"] = rep.n;
        out["J"] = matrix_json(rep.J.coeffs);
        out["tolerances"] = tolerances_json(tol);
        out["singular_values"] = {rep.cls.singular[0], rep.cls.singular[1], rep.cls.singular[2]};
        out["rank"] = rep.cls.rank;
        out["case"] = cubic::to_string(rep.cls.label);
        out["frame"] = {{"Q", matrix_json(rep.cls.frame.Q)}, {"P", matrix_json(rep.cls.frame.P)}};
        if (rep.K) out["K"] = *rep.K;
        if (rep.frame_freedom) out["frame_freedom"] = *rep.frame_freedom;
        if (rep.family)
            out["family"] = {{"canonical_A", matrix_json(rep.family->canonical.coeffs)},
                             {"freedom", rep.family->freedom}};
        json sols = json::array();
        for (const auto& s : rep.solutions) {
            json sj;
            sj["A"] = matrix_json(s.A.coeffs);
            sj["diagonal_b"] = {s.diag_b[0], s.diag_b[1], s.diag_b[2]};
            sj["residual_max"] = s.residual_max;
            sj["f2_coefficient"] = s.F.f2coeff();
            json comps = json::array();
            for (int mu = 0; mu < rep.n; ++mu)
                for (int nu = mu + 1; nu < rep.n; ++nu) {
                    const Vec3 f = s.F.at(mu, nu);
                    if (f[0] == 0.0 && f[1] == 0.0 && f[2] == 0.0) continue;
                    comps.push_back(json{{"mu", mu + 1}, {"nu", nu + 1}, {"F", {f[0], f[1], f[2]}}});
                }
            sj["strength"] = std::move(comps);
            sols.push_back(std::move(sj));
        }
        out["solutions"] = std::move(sols);
        return out.dump(2) + "\n";
    }

    std::string s;
    s += "n," + std::to_string(rep.n) + "\n";
    for (int r = 0; r < rep.J.coeffs.rows(); ++r)
        s += "J," + std::to_string(r + 1) + "," + fmt17(rep.J.coeffs(r, 0)) + "," +
             fmt17(rep.J.coeffs(r, 1)) + "," + fmt17(rep.J.coeffs(r, 2)) + "\n";
    s += "rank," + std::to_string(rep.cls.rank) + "\n";
    s += std::string("case,") + cubic::to_string(rep.cls.label) + "\n";
    s += "singular_values," + fmt17(rep.cls.singular[0]) + "," + fmt17(rep.cls.singular[1]) +
         "," + fmt17(rep.cls.singular[2]) + "\n";
    s += "tolerances,orth_rel," + fmt17(tol.orth_rel) + ",svd_rel," + fmt17(tol.svd_rel) +
         ",alg_abs," + fmt17(tol.alg_abs) + ",res_rel," + fmt17(tol.res_rel) + ",tie_rel," +
         fmt17(tol.tie_rel) + ",zero_rel," + fmt17(tol.zero_rel) + ",gate_rel," +
         fmt17(tol.gate_rel) + "\n";
    if (rep.K) s += "K," + fmt17(*rep.K) + "\n";
    if (rep.frame_freedom) s += "frame_freedom,present\n";
    if (rep.family) {
        s += "family,freedom," + rep.family->freedom + "\n";
        for (int r = 0; r < rep.family->canonical.coeffs.rows(); ++r)
            s += "family_canonical_A," + std::to_string(r + 1) + "," +
                 fmt17(rep.family->canonical.coeffs(r, 0)) + "," +
                 fmt17(rep.family->canonical.coeffs(r, 1)) + "," +
                 fmt17(rep.family->canonical.coeffs(r, 2)) + "\n";
    }
    s += "solutions," + std::to_string(rep.solutions.size()) + "\n";
    int i = 0;
    for (const auto& sol : rep.solutions) {
        ++i;
        s += "solution," + std::to_string(i) + ",residual_max," + fmt17(sol.residual_max) +
             ",f2_coefficient," + fmt17(sol.F.f2coeff()) + "\n";
        s += "diagonal_b," + std::to_string(i) + "," + fmt17(sol.diag_b[0]) + "," +
             fmt17(sol.diag_b[1]) + "," + fmt17(sol.diag_b[2]) + "\n";
        for (int r = 0; r < sol.A.coeffs.rows(); ++r)
            s += "A," + std::to_string(i) + "," + std::to_string(r + 1) + "," +
                 fmt17(sol.A.coeffs(r, 0)) + "," + fmt17(sol.A.coeffs(r, 1)) + "," +
                 fmt17(sol.A.coeffs(r, 2)) + "\n";
        for (int mu = 0; mu < rep.n; ++mu)
            for (int nu = mu + 1; nu < rep.n; ++nu) {
                const Vec3 f = sol.F.at(mu, nu);
                if (f[0] == 0.0 && f[1] == 0.0 && f[2] == 0.0) continue;
                s += "F," + std::to_string(i) + "," + std::to_string(mu + 1) + "," +
                     std::to_string(nu + 1) + "," + fmt17(f[0]) + "," + fmt17(f[1]) + "," +
                     fmt17(f[2]) + "\n";
            }
    }
    return s;
}

std::string render_classification(const solver::Classification& cls, int n,
                                  const Tolerances& tol, ReportFormat fmt) {
    if (fmt == ReportFormat::Structured) {
        json out;
        out["n"] = n;
        out["tolerances"] = tolerances_json(tol);
        out["singular_values"] = {cls.singular[0], cls.singular[1], cls.singular[2]};
        out["rank"] = cls.rank;
        out["case"] = cubic::to_string(cls.label);
        out["expected_solutions"] = expected_count(cls);
        return out.dump(2) + "\n";
    }
    std::string s;
    s += "n," + std::to_string(n) + "\n";
    s += "rank," + std::to_string(cls.rank) + "\n";
    s += std::string("case,") + cubic::to_string(cls.label) + "\n";
    s += "singular_values," + fmt17(cls.singular[0]) + "," + fmt17(cls.singular[1]) + "," +
         fmt17(cls.singular[2]) + "\n";
    s += "expected_solutions," + expected_count(cls) + "\n";
    s += "tolerances,tie_rel," + fmt17(tol.tie_rel) + ",zero_rel," + fmt17(tol.zero_rel) + "\n";
    return s;
}

std::string render_verification(const MatR& residual_matrix, double residual_max,
                                double tolerance, bool pass, ReportFormat fmt) {
    if (fmt == ReportFormat::Structured) {
        json out;
        out["residual"] = matrix_json(residual_matrix);
        out["residual_max"] = residual_max;
        out["tolerance"] = tolerance;
        out["pass"] = pass;
        return out.dump(2) + "\n";
    }
    std::string s;
    s += std::string("pass,") + (pass ? "true" : "false") + "\n";
    s += "residual_max," + fmt17(residual_max) + "\n";
    s += "tolerance," + fmt17(tolerance) + "\n";
    for (int r = 0; r < residual_matrix.rows(); ++r)
        s += "residual," + std::to_string(r + 1) + "," + fmt17(residual_matrix(r, 0)) + "," +
             fmt17(residual_matrix(r, 1)) + "," + fmt17(residual_matrix(r, 2)) + "\n";
    return s;
}

} // namespace ym::io
