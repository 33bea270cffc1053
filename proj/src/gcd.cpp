#include "secmat/gcd.hpp"

#include <algorithm>

#include "secmat/errors.hpp"

namespace secmat {

namespace {

int last_variable(const Polynomial& f) {
  int v = -1;
  for (const auto& t : f.terms()) v = std::max(v, t.pp.last_variable());
  return v;
}

// Coefficients of f as a polynomial in x_v: f = sum_k coeffs[k] * x_v^k.
std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t v) {
  const int deg = f.degree_in(v);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(deg, 0) + 1));
  for (const auto& t : f.terms()) {
    PowerProduct rest = t.pp;
    const int e = rest[v];
    rest.set(v, 0);
    buckets[static_cast<std::size_t>(e)].push_back(Term{rest, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(f.ring(), std::move(b), f.order());
  return out;
}

Polynomial leading_coeff_in(const Polynomial& f, std::size_t v) {
  const int deg = f.degree_in(v);
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.pp[v] == deg) {
      PowerProduct rest = t.pp;
      rest.set(v, 0);
      terms.push_back(Term{rest, t.coeff});
    }
  }
  return Polynomial(f.ring(), std::move(terms), f.order());
}

Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
  Polynomial q(f.ring(), f.order());
  if (!divides_exactly(g, f, &q)) throw InvariantViolation("gcd: inexact division");
  return q;
}

Polynomial one(const Polynomial& like) {
  return Polynomial::constant(like.ring(), 1, like.order());
}

Polynomial gcd_nonzero(const Polynomial& f, const Polynomial& g);

Polynomial content_in(const Polynomial& f, std::size_t v) {
  Polynomial c(f.ring(), f.order());
  for (const auto& coeff : coefficients_in(f, v)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? primitive_part(coeff) : gcd_nonzero(c, coeff);
    if (c.is_constant()) return one(f);
  }
  return c;
}

Polynomial primitive_in(const Polynomial& f, std::size_t v) {
  return primitive_part(exact_quotient(f, content_in(f, v)));
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t v) {
  const int db = b.degree_in(v);
  const Polynomial lb = leading_coeff_in(b, v);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int shift = a.degree_in(v) - db;
    const Polynomial la = leading_coeff_in(a, v);
    a = lb * a - la * b.shifted(PowerProduct::variable(b.ring()->arity(), v, shift));
    a = primitive_part(a);
  }
  return a;
}

Polynomial gcd_nonzero(const Polynomial& f, const Polynomial& g) {
  if (f.is_constant() || g.is_constant()) return one(f);
  const int vf = last_variable(f);
  const int vg = last_variable(g);
  const int v = std::max(vf, vg);
  const auto uv = static_cast<std::size_t>(v);
  if (vf < v) return gcd_nonzero(f, content_in(g, uv));
  if (vg < v) return gcd_nonzero(content_in(f, uv), g);

  const Polynomial cf = content_in(f, uv);
  const Polynomial cg = content_in(g, uv);
  const Polynomial c = gcd_nonzero(cf, cg);
  Polynomial a = primitive_part(exact_quotient(f, cf));
  Polynomial b = primitive_part(exact_quotient(g, cg));
  if (a.degree_in(uv) < b.degree_in(uv)) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = pseudo_remainder(a, b, uv);
    a = std::move(b);
    if (r.is_zero()) break;
    if (r.degree_in(uv) == 0) {
      a = one(f);
      break;
    }
    b = primitive_in(r, uv);
  }
  if (a.degree_in(uv) <= 0) return primitive_part(c);
  return primitive_part(c * primitive_in(a, uv));
}

}  // namespace

Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw SemanticError("ring mismatch");
  const Polynomial a = f.with_order(TermOrder::DegRevLex);
  const Polynomial b = g.with_order(TermOrder::DegRevLex);
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  return primitive_part(gcd_nonzero(primitive_part(a), primitive_part(b)));
}

Polynomial multivariate_gcd(std::span<const Polynomial> polys) {
  if (polys.empty()) throw SemanticError("gcd of an empty list");
  Polynomial acc(polys.front().ring());
  for (const auto& p : polys) {
    acc = multivariate_gcd(acc, p);
    if (!acc.is_zero() && acc.is_constant()) break;
  }
  return acc;
}

}  // namespace secmat
