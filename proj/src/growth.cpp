#include "secmat/growth.hpp"

#include <algorithm>
#include <sstream>

#include "secmat/binomial.hpp"
#include "secmat/errors.hpp"

namespace secmat {

std::string BoundViolation::to_string() const {
  std::ostringstream out;
  out << "(" << inequality << ") fails at i=" << i << ", d=" << d << ": " << lhs << " > "
      << rhs;
  return out.str();
}

std::vector<BoundViolation> check_bounds(const SectionalMatrix& m) {
  std::vector<BoundViolation> out;
  const std::size_t n = m.arity();
  const int top = m.max_degree();
  auto report = [&](char kind, std::size_t i, int d, std::int64_t lhs, std::int64_t rhs) {
    if (lhs > rhs) out.push_back({kind, i, d, lhs, rhs});
  };
  for (int d = 0; d <= top; ++d) {
    for (std::size_t i = 1; i <= n; ++i) {
      if (d < top) {
        std::int64_t sum = 0;
        for (std::size_t j = 1; j <= i; ++j) sum += m(j, d);
        report('a', i, d, m(i, d + 1), sum);
        if (d >= 1) report('b', i, d, m(i, d + 1), macaulay_bound(m(i, d), d));
      }
      if (i >= 3) {
        const std::int64_t lower = m(i - 1, d) - m(i - 2, d);
        const std::int64_t upper = m(i, d) - m(i - 1, d);
        // The differences are Hilbert functions shifted by one degree, so
        // the Green bound applies to them in degree d-1.
        if (d >= 2) {
          report('c', i, d, lower, upper < 0 ? -1 : green_bound(upper, d - 1));
        } else {
          report('c', i, d, lower, upper);
        }
      }
      if (i >= 2) {
        report('d', i, d, m(i - 1, d), d >= 1 ? green_bound(m(i, d), d) : m(i, d));
      }
    }
  }
  return out;
}

bool maximal_growth(const SectionalMatrix& m, std::size_t i, int d) {
  if (d < 0 || d + 1 > m.max_degree()) {
    throw PreconditionError("maximal growth at degree " + std::to_string(d) +
                            " needs column " + std::to_string(d + 1));
  }
  std::int64_t sum = 0;
  for (std::size_t j = 1; j <= i; ++j) sum += m(j, d);
  return m(i, d + 1) == sum;
}

bool no_new_generators_check(const SectionalMatrix& m, const MonomialIdeal& gin,
                             std::size_t i, int d) {
  bool found = false;
  for (const auto& t : gin.generators()) {
    if (t.degree() != d + 1) continue;
    bool inside = true;
    for (std::size_t k = i; k < gin.arity(); ++k) inside = inside && t[k] == 0;
    found = found || inside;
  }
  return maximal_growth(m, i, d) == !found;
}

namespace {

void require_persistence(const SectionalMatrix& m, int delta, std::size_t i) {
  if (i < 1 || i > m.arity()) throw SemanticError("row index out of range");
  if (m.generator_degree() > delta + 1) {
    throw PreconditionError("the ideal has generators of degree " +
                            std::to_string(m.generator_degree()) + " > delta+1 = " +
                            std::to_string(delta + 1));
  }
  if (!maximal_growth(m, i, delta)) {
    throw PreconditionError("no " + std::to_string(i) + "-maximal growth in degree " +
                            std::to_string(delta));
  }
}

// C(x + a, k) as a polynomial in x.
RationalPolynomial shifted_binomial(std::int64_t a, std::int64_t k) {
  RationalPolynomial p{{BigRational(1)}};
  BigRational factorial = 1;
  for (std::int64_t r = 0; r < k; ++r) {
    // multiply by (x + a - r)
    std::vector<BigRational> next(p.coeffs.size() + 1, BigRational(0));
    for (std::size_t e = 0; e < p.coeffs.size(); ++e) {
      next[e + 1] += p.coeffs[e];
      next[e] += p.coeffs[e] * BigRational(static_cast<long>(a - r));
    }
    p.coeffs = std::move(next);
    factorial *= BigRational(static_cast<long>(r + 1));
  }
  for (auto& c : p.coeffs) c /= factorial;
  return p;
}

void trim(RationalPolynomial& p) {
  while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
}

IntSeries multiply(const IntSeries& a, const IntSeries& b) {
  if (a.empty() || b.empty()) return {};
  IntSeries out(a.size() + b.size() - 1, 0);
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) out[x + y] += a[x] * b[y];
  }
  return out;
}

IntSeries one_minus_t_power(std::size_t e) {
  IntSeries out{1};
  for (std::size_t k = 0; k < e; ++k) out = multiply(out, IntSeries{1, -1});
  return out;
}

}  // namespace

std::int64_t persistence_extend(const SectionalMatrix& m, int delta, std::size_t i, int d) {
  if (d < 1) throw PreconditionError("persistence_extend needs d >= 1");
  require_persistence(m, delta, i);
  std::int64_t value = 0;
  for (std::size_t j = 1; j <= i; ++j) {
    const auto k = static_cast<std::int64_t>(i - j);
    value += binomial(k + d - 1, k) * m(j, delta);
  }
  return value;
}

int RationalPolynomial::degree() const { return static_cast<int>(coeffs.size()) - 1; }

BigRational RationalPolynomial::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

const BigRational& RationalPolynomial::leading_coefficient() const {
  if (coeffs.empty()) throw SemanticError("zero polynomial has no leading coefficient");
  return coeffs.back();
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const BigRational& c = coeffs[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigRational mag = negative ? BigRational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (k == 0 || !unit) out += secmat::to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

RationalPolynomial hilbert_polynomial_of_section(const SectionalMatrix& m, int delta,
                                                 std::size_t i) {
  require_persistence(m, delta, i);
  RationalPolynomial p{std::vector<BigRational>(i, BigRational(0))};
  for (std::size_t j = 1; j <= i; ++j) {
    const std::int64_t value = m(j, delta);
    if (value == 0) continue;
    const auto k = static_cast<std::int64_t>(i - j);
    const RationalPolynomial term = shifted_binomial(k - delta - 1, k);
    for (std::size_t e = 0; e < term.coeffs.size(); ++e) {
      p.coeffs[e] += term.coeffs[e] * BigRational(static_cast<long>(value));
    }
  }
  trim(p);
  return p;
}

HilbertNumerator hilbert_series_of_section(const SectionalMatrix& m, int delta,
                                           std::size_t i) {
  require_persistence(m, delta, i);
  IntSeries head;
  for (int d = 0; d <= delta; ++d) head.push_back(m(i, d));
  IntSeries num = multiply(head, one_minus_t_power(i));
  num.resize(std::max(num.size(), static_cast<std::size_t>(delta) + 1 + i), 0);
  for (std::size_t j = 1; j <= i; ++j) {
    const IntSeries tail = one_minus_t_power(j - 1);
    for (std::size_t e = 0; e < tail.size(); ++e) {
      num[static_cast<std::size_t>(delta) + 1 + e] += m(j, delta) * tail[e];
    }
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return HilbertNumerator{std::move(num), i};
}

HilbertNumerator reduce_series(HilbertNumerator series) {
  auto& c = series.coeffs;
  while (series.denominator_exponent > 0 && !c.empty()) {
    std::int64_t at_one = 0;
    for (auto v : c) at_one += v;
    if (at_one != 0) break;
    // Divide by (1 - t): q_k = sum_{e <= k} c_e.
    IntSeries q(c.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
      acc += c[k];
      q[k] = acc;
    }
    c = std::move(q);
    while (!c.empty() && c.back() == 0) c.pop_back();
    --series.denominator_exponent;
  }
  return series;
}

DimDeg dim_deg_of_series(const HilbertNumerator& series) {
  const HilbertNumerator r = reduce_series(series);
  std::int64_t at_one = 0;
  for (auto v : r.coeffs) at_one += v;
  return {static_cast<int>(r.denominator_exponent), at_one};
}

DimDeg dim_deg(const SectionalMatrix& m, int delta) {
  const std::size_t n = m.arity();
  auto inconclusive = [&](const std::string& why) {
    return PreconditionError("dimension and degree are inconclusive at delta=" +
                             std::to_string(delta) + ": " + why);
  };
  if (delta < 0 || delta + 1 > m.max_degree()) throw inconclusive("column delta+1 missing");
  if (m(n, delta) == 0) throw inconclusive("I_delta = P_delta");
  if (m.generator_degree() > delta + 1) throw inconclusive("generators above delta+1");
  std::size_t i = 1;
  while (m(i, delta) == 0) ++i;
  if (m(i, delta) != m(i, delta + 1)) throw inconclusive("M(i,delta) != M(i,delta+1)");
  return {static_cast<int>(n - i + 1), m(i, delta)};
}

SectionHilbertSummary section_summary(const SectionalMatrix& m, int delta, std::size_t i) {
  SectionHilbertSummary s{hilbert_polynomial_of_section(m, delta, i),
                          hilbert_series_of_section(m, delta, i), 0, 0};
  const DimDeg dd = dim_deg_of_series(s.hilbert_series);
  s.dim = dd.dim;
  s.deg = dd.deg;
  return s;
}

GrowthReport growth_report(const SectionalMatrix& m, int predict_columns) {
  const std::size_t n = m.arity();
  const int top = m.max_degree();
  GrowthReport g;
  g.maximal.assign(n, std::vector<bool>(static_cast<std::size_t>(top), false));
  g.first_persistent_degree.assign(n, std::nullopt);
  g.predicted.assign(n, {});
  const int from = std::max(0, m.generator_degree() - 1);
  for (std::size_t i = 1; i <= n; ++i) {
    for (int d = 0; d < top; ++d) {
      const bool flag = maximal_growth(m, i, d);
      g.maximal[i - 1][static_cast<std::size_t>(d)] = flag;
      if (flag && d >= from && !g.first_persistent_degree[i - 1]) {
        g.first_persistent_degree[i - 1] = d;
      }
    }
    if (const auto delta = g.first_persistent_degree[i - 1]) {
      for (int k = 1; k <= predict_columns; ++k) {
        g.predicted[i - 1].push_back(persistence_extend(m, *delta, i, top + k - *delta));
      }
    }
  }
  return g;
}

}  // namespace secmat
