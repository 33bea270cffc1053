#include "secmat/sectional_matrix.hpp"

#include <algorithm>

#include "secmat/binomial.hpp"
#include "secmat/errors.hpp"
#include "secmat/groebner.hpp"

namespace secmat {

SectionalMatrix::SectionalMatrix(std::vector<std::vector<std::int64_t>> rows,
                                 MonomialIdeal source, int generator_degree)
    : rows_(std::move(rows)), source_(std::move(source)), generator_degree_(generator_degree) {
  if (rows_.empty() || rows_.front().empty()) {
    throw SemanticError("a sectional matrix needs at least one row and one column");
  }
  for (const auto& r : rows_) {
    if (r.size() != rows_.front().size()) throw SemanticError("ragged sectional matrix");
  }
}

std::int64_t SectionalMatrix::operator()(std::size_t i, int d) const {
  if (i < 1 || i > rows_.size() || d < 0 || d > max_degree()) {
    throw SemanticError("sectional matrix entry (" + std::to_string(i) + "," +
                        std::to_string(d) + ") is out of range");
  }
  return rows_[i - 1][static_cast<std::size_t>(d)];
}

std::int64_t full_ring_entry(std::size_t i, int d) {
  if (d < 0) return 0;
  return binomial(d + static_cast<std::int64_t>(i) - 1, static_cast<std::int64_t>(i) - 1);
}

SectionalMatrix sectional_matrix_of_gin(const MonomialIdeal& gin, int generator_degree,
                                        int max_degree) {
  if (max_degree < 0) throw SemanticError("negative matrix extent");
  const std::size_t n = gin.arity();
  std::vector<std::vector<std::int64_t>> rows(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const HilbertNumerator num = hilbert_numerator(restrict_to_first_vars(gin, i));
    auto& row = rows[i - 1];
    row.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d) row.push_back(num.series_coefficient(d));
  }
  return SectionalMatrix(std::move(rows), gin, generator_degree);
}

int minimal_generator_degree(const IdealPresentation& ideal) {
  require_homogeneous(ideal);
  std::vector<Polynomial> gens = ideal.generators;
  while (!gens.empty()) {
    int top = 0;
    for (const auto& g : gens) top = std::max(top, g.degree());
    std::vector<Polynomial> lower;
    std::vector<Polynomial> upper;
    for (auto& g : gens) (g.degree() < top ? lower : upper).push_back(std::move(g));
    const GroebnerBasis gb = buchberger(IdealPresentation(ideal.ring, lower),
                                        TermOrder::DegRevLex, top);
    for (const auto& f : upper) {
      if (!normal_form(f, gb.elements, TermOrder::DegRevLex).is_zero()) return top;
    }
    gens = std::move(lower);
  }
  return 0;
}

SectionalMatrix sectional_matrix(const IdealPresentation& ideal, const GinResult& gin,
                                 int max_degree) {
  if (gin.rgin.is_whole_ring()) throw SemanticError("the ideal is the whole ring");
  const int extent = max_degree < 0 ? regularity(gin.rgin) + 1 : max_degree;
  return sectional_matrix_of_gin(gin.rgin, minimal_generator_degree(ideal), extent);
}

SectionalMatrix sectional_matrix(const IdealPresentation& ideal, std::uint64_t seed,
                                 int extra_degrees) {
  if (extra_degrees < 1) throw SemanticError("extra_degrees must be at least 1");
  const GinResult gin = rgin(ideal, seed);
  return sectional_matrix(ideal, gin, regularity(gin.rgin) + extra_degrees);
}

}  // namespace secmat
