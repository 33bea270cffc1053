#include "secmat/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "secmat/errors.hpp"

namespace secmat {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw SemanticError("ring mismatch");
}

bool greater_in(TermOrder order, const PowerProduct& a, const PowerProduct& b) {
  return compare(a, b, order) == std::strong_ordering::greater;
}

std::vector<Term> collect(std::unordered_map<PowerProduct, BigRational,
                                             PowerProductHash>&& acc,
                          TermOrder order) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [pp, c] : acc) {
    if (c != 0) terms.push_back(Term{pp, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), [order](const Term& x, const Term& y) {
    return greater_in(order, x.pp, y.pp);
  });
  return terms;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, TermOrder order)
    : ring_(std::move(ring)), order_(order) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms, TermOrder order)
    : ring_(std::move(ring)), order_(order) {
  std::unordered_map<PowerProduct, BigRational, PowerProductHash> acc;
  for (auto& t : terms) {
    if (t.pp.arity() != ring_->arity()) throw SemanticError("arity mismatch");
    acc[t.pp] += t.coeff;
  }
  terms_ = collect(std::move(acc), order_);
}

Polynomial Polynomial::constant(RingPtr ring, const BigRational& c,
                                TermOrder order) {
  const std::size_t n = ring->arity();
  return monomial(std::move(ring), PowerProduct(n), c, order);
}

Polynomial Polynomial::monomial(RingPtr ring, const PowerProduct& t,
                                const BigRational& c, TermOrder order) {
  if (t.arity() != ring->arity()) throw SemanticError("arity mismatch");
  std::vector<Term> terms;
  if (c != 0) terms.push_back(Term{t, c});
  return Polynomial(std::move(ring), std::move(terms), order, Sorted{});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, TermOrder order) {
  const std::size_t n = ring->arity();
  return monomial(std::move(ring), PowerProduct::variable(n, index), 1, order);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].pp.is_one());
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.pp.degree() != terms_.front().pp.degree()) return false;
  }
  return true;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.pp.degree());
  return d;
}

int Polynomial::degree_in(std::size_t k) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.pp[k]);
  return d;
}

const PowerProduct& Polynomial::leading_pp() const {
  if (terms_.empty()) throw SemanticError("zero polynomial has no leading term");
  return terms_.front().pp;
}

const BigRational& Polynomial::leading_coeff() const {
  if (terms_.empty()) throw SemanticError("zero polynomial has no leading term");
  return terms_.front().coeff;
}

Polynomial Polynomial::with_order(TermOrder order) const {
  std::vector<Term> terms = terms_;
  std::sort(terms.begin(), terms.end(), [order](const Term& x, const Term& y) {
    return greater_in(order, x.pp, y.pp);
  });
  return Polynomial(ring_, std::move(terms), order, Sorted{});
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.coeff = -t.coeff;
  return Polynomial(ring_, std::move(terms), order_, Sorted{});
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (a.order_ != b.order_) return a + b.with_order(a.order_);
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    const auto c = compare(i->pp, j->pp, a.order_);
    if (c == std::strong_ordering::greater) {
      out.push_back(*i++);
    } else if (c == std::strong_ordering::less) {
      out.push_back(*j++);
    } else {
      BigRational s = i->coeff + j->coeff;
      if (s != 0) out.push_back(Term{i->pp, std::move(s)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.terms_.end());
  out.insert(out.end(), j, b.terms_.end());
  return Polynomial(a.ring_, std::move(out), a.order_, Polynomial::Sorted{});
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  std::unordered_map<PowerProduct, BigRational, PowerProductHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      acc[s.pp * t.pp] += s.coeff * t.coeff;
    }
  }
  return Polynomial(a.ring_, collect(std::move(acc), a.order_), a.order_,
                    Polynomial::Sorted{});
}

Polynomial operator*(const Polynomial& a, const BigRational& c) {
  if (c == 0) return Polynomial(a.ring_, a.order_);
  std::vector<Term> terms = a.terms_;
  for (auto& t : terms) t.coeff *= c;
  return Polynomial(a.ring_, std::move(terms), a.order_, Polynomial::Sorted{});
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1, order_);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::shifted(const PowerProduct& t) const {
  std::vector<Term> terms = terms_;
  for (auto& term : terms) term.pp = term.pp * t;
  return Polynomial(ring_, std::move(terms), order_, Sorted{});
}

BigRational Polynomial::evaluate(std::span<const BigRational> point) const {
  if (point.size() != ring_->arity()) throw SemanticError("arity mismatch");
  BigRational sum = 0;
  for (const auto& t : terms_) {
    BigRational v = t.coeff;
    for (std::size_t k = 0; k < point.size(); ++k) {
      for (int e = 0; e < t.pp[k]; ++e) v *= point[k];
    }
    sum += v;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    BigRational mag = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.pp.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += secmat::to_string(t.pp, *ring_);
    } else {
      out += mag.get_str() + "*" + secmat::to_string(t.pp, *ring_);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.order_ != b.order_) return a == b.with_order(a.order_);
  return a.terms_ == b.terms_;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial poly_scale(const Polynomial& a, const BigRational& c) { return a * c; }

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw SemanticError("matrix is not square");
  }
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Polynomial apply_linear_change(const Polynomial& f, const IntMatrix& m) {
  const std::size_t n = f.ring()->arity();
  if (m.size() != n) throw SemanticError("matrix size does not match the ring");
  if (determinant(m) == 0) throw SemanticError("singular change of coordinates");
  const RingPtr& ring = f.ring();
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != 0) {
        terms.push_back(Term{PowerProduct::variable(n, j), BigRational(m[i][j])});
      }
    }
    images.emplace_back(ring, std::move(terms), f.order());
  }
  // powers[i][e] = images[i]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(ring, 1, f.order()));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  std::unordered_map<PowerProduct, BigRational, PowerProductHash> acc;
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(ring, t.coeff, f.order());
    for (std::size_t i = 0; i < n; ++i) {
      if (t.pp[i] != 0) prod = prod * power(i, t.pp[i]);
    }
    for (const auto& s : prod.terms()) acc[s.pp] += s.coeff;
  }
  std::vector<Term> terms;
  for (auto& [pp, c] : acc) {
    if (c != 0) terms.push_back(Term{pp, c});
  }
  return Polynomial(ring, std::move(terms), f.order());
}

bool divides_exactly(const Polynomial& g, const Polynomial& f, Polynomial* quotient) {
  if (g.is_zero()) throw SemanticError("division by the zero polynomial");
  require_same_ring(f, g);
  const Polynomial divisor = g.with_order(f.order());
  Polynomial rest = f;
  std::vector<Term> q;
  while (!rest.is_zero()) {
    const PowerProduct& lt = rest.leading_pp();
    if (!divisor.leading_pp().divides(lt)) return false;
    Term step{lt.quotient(divisor.leading_pp()),
              rest.leading_coeff() / divisor.leading_coeff()};
    rest = rest - divisor.shifted(step.pp) * step.coeff;
    q.push_back(std::move(step));
  }
  if (quotient != nullptr) *quotient = Polynomial(f.ring(), std::move(q), f.order());
  return true;
}

Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  BigRational scale(den_lcm, num_gcd);
  if (f.leading_coeff() < 0) scale = -scale;
  return f * scale;
}

IdealPresentation::IdealPresentation(RingPtr r, std::vector<Polynomial> gens)
    : ring(std::move(r)) {
  for (auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw SemanticError("generator ring mismatch");
    if (!g.is_zero()) generators.push_back(std::move(g));
  }
}

bool IdealPresentation::is_homogeneous() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

int IdealPresentation::max_generator_degree() const {
  int d = 0;
  for (const auto& g : generators) d = std::max(d, g.degree());
  return d;
}

int IdealPresentation::min_generator_degree() const {
  if (generators.empty()) return 0;
  int d = generators.front().degree();
  for (const auto& g : generators) d = std::min(d, g.degree());
  return d;
}

void require_homogeneous(const IdealPresentation& ideal) {
  for (const auto& g : ideal.generators) {
    if (!g.is_homogeneous()) {
      throw SemanticError("generator is not homogeneous: " + g.to_string());
    }
  }
}

}  // namespace secmat
