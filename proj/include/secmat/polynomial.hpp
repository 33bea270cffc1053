#ifndef SECMAT_POLYNOMIAL_HPP
#define SECMAT_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <vector>

#include "secmat/power_product.hpp"
#include "secmat/rational.hpp"

namespace secmat {

struct Term {
  PowerProduct pp;
  BigRational coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.pp == b.pp && a.coeff == b.coeff;
  }
};

/// Square integer matrix, row-major: row i gives the image of x_i.
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Immutable multivariate polynomial over Q with terms kept strictly
/// descending under its term order and no zero coefficients.
class Polynomial {
 public:
  /// Zero polynomial in `ring`.
  explicit Polynomial(RingPtr ring, TermOrder order = TermOrder::DegRevLex);
  /// Collects like terms, drops zeros and sorts.
  Polynomial(RingPtr ring, std::vector<Term> terms,
             TermOrder order = TermOrder::DegRevLex);

  static Polynomial constant(RingPtr ring, const BigRational& c,
                             TermOrder order = TermOrder::DegRevLex);
  static Polynomial monomial(RingPtr ring, const PowerProduct& t,
                             const BigRational& c = 1,
                             TermOrder order = TermOrder::DegRevLex);
  static Polynomial variable(RingPtr ring, std::size_t index,
                             TermOrder order = TermOrder::DegRevLex);

  const RingPtr& ring() const { return ring_; }
  TermOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_homogeneous() const;
  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  /// Degree in the k-th indeterminate; -1 for zero.
  int degree_in(std::size_t k) const;

  /// Leading term data; the polynomial must be nonzero.
  const PowerProduct& leading_pp() const;
  const BigRational& leading_coeff() const;

  /// Same polynomial re-sorted under another order.
  Polynomial with_order(TermOrder order) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const BigRational& c);
  Polynomial pow(unsigned e) const;
  /// Multiplies by a power product.
  Polynomial shifted(const PowerProduct& t) const;

  BigRational evaluate(std::span<const BigRational> point) const;

  /// Canonical text, e.g. "x^4 - y^2*z^2"; re-parses to the same value.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  struct Sorted {};
  Polynomial(RingPtr ring, std::vector<Term> terms, TermOrder order, Sorted)
      : ring_(std::move(ring)), order_(order), terms_(std::move(terms)) {}

  RingPtr ring_;
  TermOrder order_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const BigRational& c);

/// Substitutes x_i -> sum_j m[i][j] x_j. Throws SemanticError when the
/// matrix is not square of the ring's arity or is singular.
Polynomial apply_linear_change(const Polynomial& f, const IntMatrix& m);

/// Exact determinant (fraction-free elimination).
BigInt determinant(const IntMatrix& m);

/// Exact quotient f / g when g divides f, otherwise nullopt-like empty flag.
bool divides_exactly(const Polynomial& g, const Polynomial& f,
                     Polynomial* quotient = nullptr);

/// Scales f to integer coefficients with content 1 and positive leading
/// coefficient (under f's own order). Zero stays zero.
Polynomial primitive_part(const Polynomial& f);

/// Homogeneous ideal presentation. An empty generator list is the zero ideal.
struct IdealPresentation {
  RingPtr ring;
  std::vector<Polynomial> generators;

  IdealPresentation(RingPtr r, std::vector<Polynomial> gens);

  bool is_zero_ideal() const { return generators.empty(); }
  bool is_homogeneous() const;
  /// Largest generator degree; 0 for the zero ideal.
  int max_generator_degree() const;
  int min_generator_degree() const;
  std::size_t arity() const { return ring->arity(); }
};

/// Throws SemanticError unless every generator is homogeneous.
void require_homogeneous(const IdealPresentation& ideal);

}  // namespace secmat

#endif  // SECMAT_POLYNOMIAL_HPP
