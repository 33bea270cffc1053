#ifndef SECMAT_MONOMIAL_IDEAL_HPP
#define SECMAT_MONOMIAL_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "secmat/power_product.hpp"

namespace secmat {

/// Integer polynomial in t, coefficients in ascending degree.
using IntSeries = std::vector<std::int64_t>;

/// Numerator N(t) of HS_{P/J}(t) = N(t) / (1 - t)^n.
struct HilbertNumerator {
  IntSeries coeffs;
  std::size_t denominator_exponent = 0;

  /// Coefficient of t^d in the expanded series.
  std::int64_t series_coefficient(int d) const;
};

/// Monomial ideal given by its minimal generators, an antichain under
/// divisibility kept in a canonical order (degree ascending, then Lex
/// descending). The zero ideal has no generators; the whole ring has the
/// single generator 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t arity);
  /// Minimalizes the given power products.
  MonomialIdeal(std::size_t arity, std::vector<PowerProduct> generators);

  static MonomialIdeal whole_ring(std::size_t arity);

  std::size_t arity() const { return arity_; }
  const std::vector<PowerProduct>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_whole_ring() const;
  /// Largest degree of a minimal generator; 0 for the zero ideal.
  int max_degree() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.arity_ == b.arity_ && a.gens_ == b.gens_;
  }

  std::string to_string(const Ring& ring) const;

 private:
  std::size_t arity_;
  std::vector<PowerProduct> gens_;
};

bool is_member(const PowerProduct& t, const MonomialIdeal& ideal);

/// Borel-move closure test: for every generator t, every x_j | t and i < j,
/// x_i * t / x_j lies in the ideal.
bool is_strongly_stable(const MonomialIdeal& ideal);

/// Image under x_{i+1}, ..., x_n -> 0, as an ideal in i indeterminates.
MonomialIdeal restrict_to_first_vars(const MonomialIdeal& ideal, std::size_t i);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
/// J : t for a power product t.
MonomialIdeal colon(const MonomialIdeal& ideal, const PowerProduct& t);
/// J : m with m = (x_1, ..., x_n).
MonomialIdeal colon_by_irrelevant(const MonomialIdeal& ideal);
/// J : m^infinity, computed as the fixpoint of colon_by_irrelevant.
MonomialIdeal saturate_monomial(const MonomialIdeal& ideal);
/// Generators with x_n set to 1; equals the saturation when the ideal is
/// strongly stable.
MonomialIdeal drop_last_variable(const MonomialIdeal& ideal);

/// Hilbert series numerator by recursive pivot splitting
/// N(J) = N(J + (p)) + t^deg(p) N(J : p).
HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal);

/// dim_K (P/J)_d from the Hilbert numerator.
std::int64_t hilbert_function_value(const MonomialIdeal& ideal, int d);

/// Counts standard monomials of degree d by enumeration. Throws
/// SemanticError when more than `limit` monomials would be enumerated.
std::int64_t count_monomials_oracle(const MonomialIdeal& ideal, int d,
                                    std::int64_t limit = 10'000'000);

}  // namespace secmat

#endif  // SECMAT_MONOMIAL_IDEAL_HPP
