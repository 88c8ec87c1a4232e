#pragma once

#include <optional>
#include <string>

#include "ym/solver.hpp"

namespace ym::io {

/* Input is either a structured document {"n": ..., "J": [[...], ...]},
 * optionally with "A" for verification, or a bare comma-separated matrix
 * (one row per line, three columns, n inferred). Detection: first non-space
 * byte '{' means structured. ParseError messages name the offending field. */
struct InputDocument {
    int n = 0;
    MatR J;
    std::optional<MatR> A;
};

InputDocument parse_document(const std::string& text);

enum class ReportFormat { Structured, Csv };

ReportFormat parse_format(const std::string& name); // "structured" | "csv"

/* Reports echo the effective tolerances so runs are reproducible from the
 * output alone. Doubles round-trip bit-faithfully in both formats. */
std::string render_solution(const solver::SolutionReport& rep, const Tolerances& tol,
                            ReportFormat fmt);

std::string render_classification(const solver::Classification& cls, int n,
                                  const Tolerances& tol, ReportFormat fmt);

std::string render_verification(const MatR& residual_matrix, double residual_max,
                                double tolerance, bool pass, ReportFormat fmt);

} // namespace ym::io
