#ifndef SECMAT_SECTIONAL_MATRIX_HPP
#define SECMAT_SECTIONAL_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "secmat/gin.hpp"
#include "secmat/monomial_ideal.hpp"
#include "secmat/polynomial.hpp"

namespace secmat {

/// M(i, d) for 1 <= i <= n and 0 <= d <= D, together with the rgin it was
/// read from. `generator_degree` is the top degree of a minimal generator
/// of the ideal itself (0 for the zero ideal); the persistence statements
/// need it.
class SectionalMatrix {
 public:
  SectionalMatrix(std::vector<std::vector<std::int64_t>> rows, MonomialIdeal source,
                  int generator_degree);

  std::size_t arity() const { return rows_.size(); }
  int max_degree() const { return static_cast<int>(rows_.front().size()) - 1; }
  /// Row index i is 1-based, as in the literature.
  std::int64_t operator()(std::size_t i, int d) const;
  std::int64_t at(std::size_t i, int d) const { return (*this)(i, d); }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
  const MonomialIdeal& source() const { return source_; }
  int reg() const { return source_.max_degree(); }
  int generator_degree() const { return generator_degree_; }

  friend bool operator==(const SectionalMatrix& a, const SectionalMatrix& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<std::vector<std::int64_t>> rows_;
  MonomialIdeal source_;
  int generator_degree_;
};

/// Sectional matrix read off a strongly stable ideal J:
/// M(i, d) = H of restrict_to_first_vars(J, i) in degree d.
SectionalMatrix sectional_matrix_of_gin(const MonomialIdeal& gin, int generator_degree,
                                        int max_degree);

/// rgin(I) followed by sectional_matrix_of_gin up to degree reg + extra_degrees.
SectionalMatrix sectional_matrix(const IdealPresentation& ideal, std::uint64_t seed,
                                 int extra_degrees = 1);

/// Same, reusing an rgin computed earlier; max_degree < 0 means reg + 1.
SectionalMatrix sectional_matrix(const IdealPresentation& ideal, const GinResult& gin,
                                 int max_degree = -1);

/// Top degree of a minimal generator of I: the largest generator degree of
/// a reduced DegRevLex basis of the degree-capped kind, i.e. of the ideal's
/// own minimal generators. 0 for the zero ideal.
int minimal_generator_degree(const IdealPresentation& ideal);

/// Count of monomials of degree d in i indeterminates.
std::int64_t full_ring_entry(std::size_t i, int d);

}  // namespace secmat

#endif  // SECMAT_SECTIONAL_MATRIX_HPP
