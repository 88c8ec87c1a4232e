#include <doctest.h>

#include <cmath>
#include <string>

#include <json.hpp>

#include "support.hpp"
#include "ym/io.hpp"
#include "ym/solver.hpp"

using namespace ym;
using namespace ym::io;

namespace {

MatR diag3(double a, double b, double c) {
    MatR m(3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

} // namespace

TEST_CASE("structured documents parse") {
    const std::string text = R"({"n": 2, "J": [[1, 2, 3], [4, 5, 6]]})";
    const InputDocument doc = parse_document(text);
    CHECK(doc.n == 2);
    CHECK(doc.J(0, 0) == 1.0);
    CHECK(doc.J(1, 2) == 6.0);
    CHECK_FALSE(doc.A.has_value());

    const InputDocument with_a =
        parse_document(R"({"J": [[0, 0, 1]], "A": [[0.25, -1e-3, 2e2]]})");
    CHECK(with_a.n == 1); // n inferred from the rows
    REQUIRE(with_a.A.has_value());
    CHECK((*with_a.A)(0, 2) == 200.0);

    // leading whitespace still selects the structured branch
    CHECK(parse_document("  \n\t {\"J\": [[1,2,3]]}").n == 1);
}

TEST_CASE("structured documents are validated field by field") {
    using doctest::Contains;
    CHECK_THROWS_AS(parse_document("{"), ParseError);
    CHECK_THROWS_AS(parse_document("{\"n\": 2}"), ParseError);
    CHECK_THROWS_WITH_AS(parse_document(R"({"n": 3, "J": [[1,2,3],[4,5,6]]})"),
                         Contains("J"), ParseError);
    CHECK_THROWS_WITH_AS(parse_document(R"({"J": [[1,2],[4,5]]})"), Contains("J[0]"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_document(R"({"J": [[1,2,"x"],[4,5,6]]})"),
                         Contains("J[0][2]"), ParseError);
    CHECK_THROWS_WITH_AS(parse_document(R"({"n": 0, "J": [[1,2,3]]})"), Contains("n"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_document(R"({"J": [[1,2,3]], "A": [[1,2,3],[4,5,6]]})"),
                         Contains("A"), ParseError);
    CHECK_THROWS_AS(parse_document("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_document("   "), ParseError);
}

TEST_CASE("comma-separated documents parse") {
    const InputDocument doc = parse_document("13,0,0\n0,20,0\n0,0,15\n");
    CHECK(doc.n == 3);
    CHECK(doc.J(1, 1) == 20.0);
    CHECK_FALSE(doc.A.has_value());

    // blank lines and spaces are tolerated, scientific notation accepted
    const InputDocument spaced = parse_document("\n 1.5e1 , -2 , 0 \n\n");
    CHECK(spaced.n == 1);
    CHECK(spaced.J(0, 0) == 15.0);
    CHECK(spaced.J(0, 1) == -2.0);
}

TEST_CASE("comma-separated documents are validated") {
    using doctest::Contains;
    CHECK_THROWS_WITH_AS(parse_document("1,2\n"), Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_document("1,2,3,4\n"), Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_document("1,2,3\n1,x,3\n"), Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_document("inf,2,3\n"), Contains("finite"), ParseError);
    CHECK_THROWS_WITH_AS(parse_document("1e999,2,3\n"), Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_document("1 2,3,4\n"), Contains("column 1"), ParseError);
}

TEST_CASE("format names") {
    CHECK(parse_format("structured") == ReportFormat::Structured);
    CHECK(parse_format("csv") == ReportFormat::Csv);
    CHECK_THROWS_AS(parse_format("yaml"), ParseError);
}

TEST_CASE("structured solution reports round-trip bit-faithfully") {
    const Tolerances tol;
    const solver::SolutionReport rep = solver::solve(solver::Current{diag3(13, 20, 15)}, tol);
    const std::string text = render_solution(rep, tol, ReportFormat::Structured);

    const nlohmann::json doc = nlohmann::json::parse(text);
    CHECK(doc["n"] == 3);
    CHECK(doc["rank"] == 3);
    CHECK(doc["case"] == "all-distinct");
    CHECK(doc["solutions"].size() == 2);
    CHECK(doc["J"][1][1] == 20.0);
    CHECK(doc["tolerances"]["res_rel"] == tol.res_rel);

    // doubles survive the text round trip exactly
    const double a00 = doc["solutions"][0]["A"][0][0].get<double>();
    CHECK(a00 == rep.solutions[0].A.coeffs(0, 0));
    const double k = doc["K"].get<double>();
    CHECK(k == *rep.K);
    const double f2 = doc["solutions"][1]["f2_coefficient"].get<double>();
    CHECK(f2 == rep.solutions[1].F.f2coeff());

    // strength components list the upper triangle
    CHECK(doc["solutions"][0]["strength"].size() == 3);
    CHECK(doc["solutions"][0]["strength"][0]["mu"] == 1);
    CHECK(doc["solutions"][0]["strength"][0]["nu"] == 2);
}

TEST_CASE("family reports carry the descriptor") {
    const Tolerances tol;
    const solver::SolutionReport rep = solver::solve(solver::Current{MatR(3, 3)}, tol);
    const std::string text = render_solution(rep, tol, ReportFormat::Structured);
    const nlohmann::json doc = nlohmann::json::parse(text);
    CHECK(doc["case"] == "zero-current");
    CHECK(doc.contains("family"));
    CHECK(doc["family"]["canonical_A"][0][0] == 1.0);
    CHECK(doc.contains("frame_freedom"));
    CHECK(doc["solutions"].size() == 1);
}

TEST_CASE("csv solution reports are parseable lines") {
    const Tolerances tol;
    const solver::SolutionReport rep = solver::solve(solver::Current{diag3(13, 20, 15)}, tol);
    const std::string text = render_solution(rep, tol, ReportFormat::Csv);
    CHECK(text.find("case,all-distinct\n") != std::string::npos);
    CHECK(text.find("solutions,2\n") != std::string::npos);
    CHECK(text.find("\nK,") != std::string::npos);
    CHECK(text.find("\nA,1,1,") != std::string::npos);
    CHECK(text.find("\nF,1,1,2,") != std::string::npos);
    CHECK(text.find("\nJ,2,0,20,0\n") != std::string::npos);

    // the printed K parses back to the identical double
    const auto pos = text.find("\nK,") + 3;
    const double k = std::stod(text.substr(pos));
    CHECK(k == *rep.K);
}

TEST_CASE("classification reports") {
    const Tolerances tol;
    const solver::Classification cls =
        solver::classify(solver::Current{diag3(13, 20, 15)}, tol);
    const std::string text = render_classification(cls, 3, tol, ReportFormat::Structured);
    const nlohmann::json doc = nlohmann::json::parse(text);
    CHECK(doc["rank"] == 3);
    CHECK(doc["case"] == "all-distinct");
    CHECK(doc["expected_solutions"] == "2");
    CHECK(doc["singular_values"][0] == cls.singular[0]);

    const std::string csv = render_classification(cls, 3, tol, ReportFormat::Csv);
    CHECK(csv.find("rank,3\n") != std::string::npos);
    CHECK(csv.find("expected_solutions,2\n") != std::string::npos);
}

TEST_CASE("verification reports") {
    MatR res(2, 3);
    res(0, 0) = -1.0;
    res(1, 2) = 0.5;
    const std::string text = render_verification(res, 1.0, 1e-9, false, ReportFormat::Structured);
    const nlohmann::json doc = nlohmann::json::parse(text);
    CHECK(doc["pass"] == false);
    CHECK(doc["residual_max"] == 1.0);
    CHECK(doc["tolerance"] == 1e-9);
    CHECK(doc["residual"][0][0] == -1.0);

    const std::string csv = render_verification(res, 1.0, 1e-9, true, ReportFormat::Csv);
    CHECK(csv.find("pass,true\n") != std::string::npos);
    CHECK(csv.find("residual,2,0,0,0.5\n") != std::string::npos);
}
