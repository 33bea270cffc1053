#ifndef SECMAT_REPORT_HPP
#define SECMAT_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "secmat/analysis.hpp"
#include "secmat/gin.hpp"
#include "secmat/sectional_matrix.hpp"

namespace secmat {

inline constexpr std::string_view kReportSchema = "secmat-report/1";
inline constexpr std::string_view kMatrixSchema = "secmat-matrix/1";
inline constexpr std::string_view kIdealSchema = "secmat-ideal/1";

/// Standard layout: a header "_0 _1 ..." and one right-aligned row per i,
/// truncated to columns 0..last_column (all columns when negative).
std::string format_matrix(const std::vector<std::vector<std::int64_t>>& rows,
                          int last_column = -1);

/// key=value lines after the matrix block.
std::string format_report(const AnalysisReport& report);

std::string report_to_json(const AnalysisReport& report);
/// Inverse of report_to_json. Throws SemanticError on a malformed tree or a
/// schema mismatch.
AnalysisReport report_from_json(std::string_view text);

std::string matrix_to_json(const SectionalMatrix& m, const Ring& ring, const GinResult& gin,
                           int last_column = -1);
std::string ideal_to_json(const MonomialIdeal& ideal, const Ring& ring, std::string_view kind,
                          std::string_view order, const GinResult* gin);

}  // namespace secmat

#endif  // SECMAT_REPORT_HPP
