#include "secmat/power_product.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "secmat/errors.hpp"

namespace secmat {

namespace {

void check_arity(std::size_t arity) {
  if (arity > kMaxArity) {
    throw SemanticError("at most " + std::to_string(kMaxArity) +
                        " indeterminates are supported");
  }
}

void check_exponent(long e) {
  if (e < 0) throw SemanticError("negative exponent");
  if (e > kMaxExponent) throw SemanticError("exponent overflow");
}

}  // namespace

PowerProduct::PowerProduct(std::size_t arity)
    : arity_(static_cast<std::uint16_t>(arity)) {
  check_arity(arity);
}

PowerProduct::PowerProduct(std::initializer_list<int> exponents)
    : PowerProduct(std::span<const int>(exponents.begin(), exponents.size())) {}

PowerProduct::PowerProduct(std::span<const int> exponents)
    : arity_(static_cast<std::uint16_t>(exponents.size())) {
  check_arity(exponents.size());
  for (std::size_t k = 0; k < exponents.size(); ++k) set(k, exponents[k]);
}

PowerProduct PowerProduct::variable(std::size_t arity, std::size_t index,
                                    int power) {
  PowerProduct t(arity);
  t.set(index, power);
  return t;
}

void PowerProduct::set(std::size_t k, int e) {
  check_exponent(e);
  degree_ += e - exps_[k];
  exps_[k] = static_cast<Exponent>(e);
}

bool PowerProduct::divides(const PowerProduct& other) const {
  for (std::size_t k = 0; k < arity_; ++k) {
    if (exps_[k] > other.exps_[k]) return false;
  }
  return true;
}

PowerProduct PowerProduct::lcm(const PowerProduct& other) const {
  PowerProduct r(arity_);
  for (std::size_t k = 0; k < arity_; ++k) {
    r.set(k, std::max(exps_[k], other.exps_[k]));
  }
  return r;
}

PowerProduct PowerProduct::gcd(const PowerProduct& other) const {
  PowerProduct r(arity_);
  for (std::size_t k = 0; k < arity_; ++k) {
    r.set(k, std::min(exps_[k], other.exps_[k]));
  }
  return r;
}

PowerProduct PowerProduct::quotient(const PowerProduct& other) const {
  if (!other.divides(*this)) throw SemanticError("power product not divisible");
  PowerProduct r(arity_);
  for (std::size_t k = 0; k < arity_; ++k) r.set(k, exps_[k] - other.exps_[k]);
  return r;
}

bool PowerProduct::coprime(const PowerProduct& other) const {
  for (std::size_t k = 0; k < arity_; ++k) {
    if (exps_[k] != 0 && other.exps_[k] != 0) return false;
  }
  return true;
}

PowerProduct PowerProduct::with_arity(std::size_t arity) const {
  PowerProduct r(arity);
  for (std::size_t k = 0; k < std::max<std::size_t>(arity, arity_); ++k) {
    const int e = k < arity_ ? exps_[k] : 0;
    if (k >= arity) {
      if (e != 0) throw SemanticError("power product involves a dropped variable");
      continue;
    }
    r.set(k, e);
  }
  return r;
}

int PowerProduct::last_variable() const {
  for (int k = static_cast<int>(arity_) - 1; k >= 0; --k) {
    if (exps_[k] != 0) return k;
  }
  return -1;
}

PowerProduct PowerProduct::operator*(const PowerProduct& other) const {
  if (arity_ != other.arity_) throw SemanticError("arity mismatch");
  PowerProduct r(arity_);
  for (std::size_t k = 0; k < arity_; ++k) {
    r.set(k, int(exps_[k]) + int(other.exps_[k]));
  }
  return r;
}

std::size_t PowerProduct::hash() const {
  std::size_t h = arity_;
  for (std::size_t k = 0; k < arity_; ++k) {
    h = h * 1000003u ^ exps_[k];
  }
  return h;
}

TermOrder term_order_from_name(const std::string& name) {
  if (name == "degrevlex") return TermOrder::DegRevLex;
  if (name == "lex") return TermOrder::Lex;
  if (name == "deglex") return TermOrder::DegLex;
  throw SemanticError("unknown term order '" + name + "'");
}

std::string term_order_name(TermOrder order) {
  switch (order) {
    case TermOrder::DegRevLex:
      return "degrevlex";
    case TermOrder::Lex:
      return "lex";
    case TermOrder::DegLex:
      return "deglex";
  }
  return "degrevlex";
}

std::strong_ordering compare(const PowerProduct& a, const PowerProduct& b,
                             TermOrder order) {
  if (a.arity() != b.arity()) throw SemanticError("arity mismatch in compare");
  const std::size_t n = a.arity();
  if (order != TermOrder::Lex && a.degree() != b.degree()) {
    return a.degree() <=> b.degree();
  }
  if (order == TermOrder::DegRevLex) {
    for (std::size_t k = n; k-- > 0;) {
      if (a[k] != b[k]) return b[k] <=> a[k];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] != b[k]) return a[k] <=> b[k];
  }
  return std::strong_ordering::equal;
}

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw SemanticError("a ring needs at least one variable");
  check_arity(names_.size());
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) {
      throw SemanticError("duplicate variable '" + name + "'");
    }
  }
}

int Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

std::string to_string(const PowerProduct& t, const Ring& ring) {
  std::string out;
  for (std::size_t k = 0; k < t.arity(); ++k) {
    if (t[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(k);
    if (t[k] > 1) out += '^' + std::to_string(t[k]);
  }
  return out.empty() ? "1" : out;
}

std::vector<PowerProduct> monomials_of_degree(std::size_t arity, int degree) {
  std::vector<PowerProduct> out;
  if (arity == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  // Enumerates exponent vectors with the first exponent decreasing, which
  // is DegLex order; re-sorted below.
  std::vector<int> exps(arity, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == arity) {
      exps[k] = left;
      out.emplace_back(std::span<const int>(exps));
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[k] = e;
      rec(k + 1, left - e);
    }
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), [](const PowerProduct& a, const PowerProduct& b) {
    return compare(a, b, TermOrder::DegRevLex) == std::strong_ordering::greater;
  });
  return out;
}

}  // namespace secmat
