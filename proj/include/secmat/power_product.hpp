#ifndef SECMAT_POWER_PRODUCT_HPP
#define SECMAT_POWER_PRODUCT_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace secmat {

/// Largest supported number of indeterminates. Exponent vectors are stored
/// in a fixed 16-lane block so the batch kernels can treat one power product
/// as a single 256-bit register.
inline constexpr std::size_t kMaxArity = 16;

/// Largest exponent of a single indeterminate. Kept below 2^15 so that
/// signed 16-bit lane comparisons are valid.
inline constexpr int kMaxExponent = 0x7fff;

/// Exponent vector of a monomial x_1^{a_1} ... x_n^{a_n}.
class PowerProduct {
 public:
  using Exponent = std::uint16_t;
  using Lanes = std::array<Exponent, kMaxArity>;

  PowerProduct() = default;
  /// The power product 1 in n indeterminates.
  explicit PowerProduct(std::size_t arity);
  PowerProduct(std::initializer_list<int> exponents);
  explicit PowerProduct(std::span<const int> exponents);

  /// x_index as a power product in `arity` indeterminates.
  static PowerProduct variable(std::size_t arity, std::size_t index,
                               int power = 1);

  std::size_t arity() const { return arity_; }
  int degree() const { return degree_; }
  int operator[](std::size_t k) const { return exps_[k]; }
  void set(std::size_t k, int e);
  const Lanes& lanes() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  /// True iff this divides `other`.
  bool divides(const PowerProduct& other) const;
  PowerProduct lcm(const PowerProduct& other) const;
  PowerProduct gcd(const PowerProduct& other) const;
  /// this / other; throws SemanticError when other does not divide this.
  PowerProduct quotient(const PowerProduct& other) const;
  bool coprime(const PowerProduct& other) const;
  /// Same exponents, viewed in a ring with `arity` indeterminates. Dropped
  /// positions must be zero.
  PowerProduct with_arity(std::size_t arity) const;
  /// Largest k with a nonzero exponent, or -1 for the power product 1.
  int last_variable() const;

  PowerProduct operator*(const PowerProduct& other) const;

  friend bool operator==(const PowerProduct& a, const PowerProduct& b) {
    return a.arity_ == b.arity_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  alignas(32) Lanes exps_{};
  std::uint16_t arity_ = 0;
  std::int32_t degree_ = 0;
};

struct PowerProductHash {
  std::size_t operator()(const PowerProduct& t) const { return t.hash(); }
};

enum class TermOrder { DegRevLex, Lex, DegLex };

/// Parses "degrevlex", "lex" or "deglex".
TermOrder term_order_from_name(const std::string& name);
std::string term_order_name(TermOrder order);

/// Three-way comparison of power products under a term order. Throws
/// SemanticError on arity mismatch.
std::strong_ordering compare(const PowerProduct& a, const PowerProduct& b,
                             TermOrder order);

/// Ordered list of indeterminate names; the order fixes x_1 > ... > x_n.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t k) const { return names_[k]; }
  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);
/// True when both rings declare the same variables in the same order.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// "x^2*y" style rendering; "1" for the unit power product.
std::string to_string(const PowerProduct& t, const Ring& ring);

/// All power products of degree d in n indeterminates, in DegRevLex
/// descending order.
std::vector<PowerProduct> monomials_of_degree(std::size_t arity, int degree);

}  // namespace secmat

#endif  // SECMAT_POWER_PRODUCT_HPP
