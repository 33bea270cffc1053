#include "secmat/analysis.hpp"

#include <algorithm>
#include <set>

#include "secmat/errors.hpp"
#include "secmat/gin.hpp"
#include "secmat/groebner.hpp"
#include "secmat/oracle.hpp"

namespace secmat {

namespace {

DimDeg read_dim_deg(const SectionalMatrix& m, int delta) {
  const std::size_t n = m.arity();
  if (m(n, delta) == 0) {
    // Artinian: the Hilbert function has already died out.
    std::int64_t length = 0;
    for (auto v : m.rows()[n - 1]) length += v;
    return {0, length};
  }
  return dim_deg(m, delta);
}

void cross_check_oracle(const IdealPresentation& ideal, const SectionalMatrix& m,
                        std::uint64_t seed, AnalysisReport& report) {
  int cells = 0;
  const int top = std::min(m.max_degree(), m.reg() + 1);
  for (std::size_t i = 1; i <= m.arity(); ++i) {
    for (int d = 0; d <= top; ++d) {
      const std::int64_t direct = sectional_matrix_direct_oracle(ideal, i, d, seed);
      if (direct != m(i, d)) {
        throw InvariantViolation("linear-algebra oracle gives M(" + std::to_string(i) + "," +
                                 std::to_string(d) + ") = " + std::to_string(direct) +
                                 ", rgin gives " + std::to_string(m(i, d)));
      }
      ++cells;
    }
  }
  report.notes.push_back("linear-algebra oracle agrees on " + std::to_string(cells) +
                         " entries");
}

}  // namespace

AnalysisReport analyze(const IdealPresentation& ideal, const AnalysisOptions& options) {
  require_homogeneous(ideal);
  const std::size_t n = ideal.arity();
  const GinResult gin = rgin(ideal, options.seed);
  if (gin.rgin.is_whole_ring()) throw SemanticError("the ideal is the whole ring");

  AnalysisReport report;
  report.variables = ideal.ring->names();
  for (const auto& g : ideal.generators) report.generators.push_back(g.to_string());
  report.seed = gin.seed;
  report.trials_used = gin.trials_used;
  for (const auto& t : gin.rgin.generators()) report.rgin.push_back(to_string(t, *ideal.ring));
  report.reg = regularity(gin.rgin);

  const std::set<int> truncations(options.truncations.begin(), options.truncations.end());
  int extent = std::max(report.reg + 1, options.max_degree.value_or(0));
  if (!truncations.empty()) extent = std::max(extent, *truncations.rbegin() + 1);
  const SectionalMatrix m = sectional_matrix(ideal, gin, extent);
  report.generator_degree = m.generator_degree();
  report.matrix = m.rows();

  if (const auto violations = check_bounds(m); !violations.empty()) {
    throw InvariantViolation("sectional matrix breaks a growth inequality: " +
                             violations.front().to_string());
  }
  if (options.oracle) cross_check_oracle(ideal, m, options.seed, report);

  // Dimension and degree.
  const int settled = std::max(report.reg, report.generator_degree - 1);
  const DimDeg dd = read_dim_deg(m, settled);
  const DimDeg from_series = dim_deg_of_series(hilbert_numerator(gin.rgin));
  if (!(dd == from_series)) {
    throw InvariantViolation("matrix gives dim " + std::to_string(dd.dim) + ", deg " +
                             std::to_string(dd.deg) + " but the Hilbert series gives dim " +
                             std::to_string(from_series.dim) + ", deg " +
                             std::to_string(from_series.deg));
  }
  report.dim = dd.dim;
  report.deg = dd.deg;
  report.dim_deg_delta = settled;
  for (int delta = std::max(0, report.generator_degree - 1); delta < settled; ++delta) {
    try {
      if (!(dim_deg(m, delta) == dd)) {
        throw InvariantViolation("early dimension/degree at " + std::to_string(delta) +
                                 " disagrees with the value at " + std::to_string(settled));
      }
      report.early_delta = delta;
      report.notes.push_back("dim and deg already readable at delta=" +
                             std::to_string(delta) + ", below reg=" +
                             std::to_string(report.reg));
      break;
    } catch (const PreconditionError&) {
    }
  }

  for (int s = 0; s < static_cast<int>(n); ++s) {
    try {
      report.reduction_numbers.push_back(reduction_number(gin.rgin, s));
    } catch (const InfiniteReductionNumber&) {
      report.reduction_numbers.push_back(std::nullopt);
    }
  }
  if (report.dim < static_cast<int>(n)) {
    report.reduction_number = report.reduction_numbers[static_cast<std::size_t>(report.dim)];
  }

  const GrowthReport growth = growth_report(m);
  report.maximal_growth = growth.maximal;
  report.first_persistent_degree = growth.first_persistent_degree;
  report.predicted = growth.predicted;

  if (n >= 2) {
    for (int delta = 0; delta <= m.max_degree(); ++delta) {
      if (m(n, delta) == full_ring_entry(n, delta)) continue;
      report.potential_gcd_degrees.push_back({delta, potential_gcd_degree(m, delta)});
    }
    for (int delta = 0; delta < m.max_degree(); ++delta) {
      if (m(n, delta) == full_ring_entry(n, delta)) continue;
      if (m(2, delta) < 1 || m(2, delta) != m(2, delta + 1)) continue;
      const Polynomial g = gcd_of_truncation(ideal, m, delta);
      report.gcd = GcdFinding{delta, g.degree(), g.to_string()};
      break;
    }
  }

  report.saturated = is_saturated(gin.rgin);
  for (int delta : truncations) {
    if (delta < 0) throw SemanticError("truncation degree must be non-negative");
    TruncationFinding t{delta, is_saturated(truncation_ideal(ideal, delta), options.seed),
                        n >= 2 && maximal_growth(m, n - 1, delta), std::nullopt,
                        std::nullopt};
    if (report.saturated && t.lemma_hypothesis && !t.saturated) {
      throw InvariantViolation("saturated ideal with (n-1)-maximal growth at " +
                               std::to_string(delta) + " has a non-saturated truncation");
    }
    try {
      const TruncationDimDeg td = truncation_dim_deg(ideal, m, delta, options.seed);
      t.dim = td.dim;
      t.deg = td.deg;
    } catch (const PreconditionError&) {
    }
    report.truncations.push_back(t);
  }

  report.discrepancy = saturated_dimension_discrepancy(ideal, m);
  if (const auto& dis = report.discrepancy) {
    if (dis->computed != dis->n_minus_i_plus_1) {
      throw InvariantViolation("truncation at " + std::to_string(dis->delta) +
                               " has dimension " + std::to_string(dis->computed) +
                               ", expected n-i+1 = " + std::to_string(dis->n_minus_i_plus_1));
    }
    report.notes.push_back(
        "dimension of the saturated truncation at delta=" + std::to_string(dis->delta) +
        " (i=" + std::to_string(dis->i) + "): the saturated-ideal statement gives n-i = " +
        std::to_string(dis->n_minus_i) + ", the dimension/degree theorem gives n-i+1 = " +
        std::to_string(dis->n_minus_i_plus_1) + "; direct computation gives " +
        std::to_string(dis->computed));
  }
  return report;
}

}  // namespace secmat
