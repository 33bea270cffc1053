#ifndef SECMAT_ANALYSIS_HPP
#define SECMAT_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secmat/diagnostics.hpp"
#include "secmat/polynomial.hpp"

namespace secmat {

struct AnalysisOptions {
  std::uint64_t seed = 42;
  /// Extra matrix columns beyond reg+1.
  std::optional<int> max_degree;
  std::vector<int> truncations;
  /// Cross-check the matrix against the linear-algebra oracle for d <= reg+1.
  bool oracle = false;
};

struct PotentialGcd {
  int delta;
  std::int64_t degree;
  friend bool operator==(const PotentialGcd&, const PotentialGcd&) = default;
};

struct GcdFinding {
  int delta;
  std::int64_t degree;
  std::string polynomial;
  friend bool operator==(const GcdFinding&, const GcdFinding&) = default;
};

struct TruncationFinding {
  int delta;
  bool saturated;
  /// (n-1)-maximal growth at delta.
  bool lemma_hypothesis;
  std::optional<int> dim;
  std::optional<std::int64_t> deg;
  friend bool operator==(const TruncationFinding&, const TruncationFinding&) = default;
};

/// Everything `analyze` derives from one ideal. Plain data, so that the
/// structured serialization round-trips exactly.
struct AnalysisReport {
  std::vector<std::string> variables;
  std::vector<std::string> generators;
  std::uint64_t seed = 0;
  int trials_used = 0;
  std::vector<std::string> rgin;
  int reg = 0;
  int generator_degree = 0;
  std::vector<std::vector<std::int64_t>> matrix;

  int dim = 0;
  std::int64_t deg = 0;
  /// Degree at which dim and deg were read; early_delta is the least degree
  /// below it where the hypotheses already held.
  int dim_deg_delta = 0;
  std::optional<int> early_delta;

  /// reduction_numbers[s] = r_s, empty when infinite.
  std::vector<std::optional<int>> reduction_numbers;
  std::optional<int> reduction_number;

  std::vector<std::vector<bool>> maximal_growth;
  std::vector<std::optional<int>> first_persistent_degree;
  std::vector<std::vector<std::int64_t>> predicted;

  std::vector<PotentialGcd> potential_gcd_degrees;
  std::optional<GcdFinding> gcd;

  bool saturated = false;
  std::vector<TruncationFinding> truncations;
  std::optional<DimensionDiscrepancy> discrepancy;
  std::vector<std::string> notes;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const IdealPresentation& ideal, const AnalysisOptions& options = {});

}  // namespace secmat

#endif  // SECMAT_ANALYSIS_HPP
