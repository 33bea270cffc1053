#include "secmat/monomial_ideal.hpp"

#include <algorithm>
#include <functional>

#include "secmat/binomial.hpp"
#include "secmat/errors.hpp"
#include "secmat/kernels.hpp"

namespace secmat {

namespace {

bool canonical_less(const PowerProduct& a, const PowerProduct& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return compare(a, b, TermOrder::Lex) == std::strong_ordering::greater;
}

std::vector<PowerProduct> minimalize(std::vector<PowerProduct> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  std::vector<PowerProduct> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    if (kernels::find_divisor(kept, g) == kernels::npos) kept.push_back(std::move(g));
  }
  return kept;
}

IntSeries series_add(IntSeries a, const IntSeries& b, int shift) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) {
    a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  }
  for (std::size_t k = 0; k < b.size(); ++k) a[k + static_cast<std::size_t>(shift)] += b[k];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
  IntSeries out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

bool pairwise_coprime(const std::vector<PowerProduct>& gens) {
  PowerProduct seen(gens.front().arity());
  for (const auto& g : gens) {
    if (!seen.coprime(g)) return false;
    seen = seen.lcm(g);
  }
  return true;
}

IntSeries numerator_rec(const std::vector<PowerProduct>& gens) {
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};
  if (pairwise_coprime(gens)) {
    IntSeries acc{1};
    for (const auto& g : gens) {
      IntSeries factor(static_cast<std::size_t>(g.degree()) + 1, 0);
      factor[0] = 1;
      factor.back() = -1;
      acc = series_mul(acc, factor);
    }
    return acc;
  }
  const std::size_t n = gens.front().arity();
  // Pivot on the variable occurring in the most generators.
  std::size_t best = 0;
  std::size_t best_count = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t count = 0;
    for (const auto& g : gens) count += g[k] > 0 ? 1 : 0;
    if (count > best_count) {
      best_count = count;
      best = k;
    }
  }
  std::vector<int> exps;
  int pure_power = 0;
  for (const auto& g : gens) {
    if (g[best] > 0) exps.push_back(g[best]);
    if (g.degree() == g[best]) pure_power = g[best];
  }
  std::nth_element(exps.begin(), exps.begin() + static_cast<long>(exps.size() / 2), exps.end());
  int e = exps[exps.size() / 2];
  if (pure_power != 0 && e >= pure_power) e = pure_power - 1;
  const PowerProduct pivot = PowerProduct::variable(n, best, e);

  std::vector<PowerProduct> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<PowerProduct> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) {
    PowerProduct q = g;
    q.set(best, std::max(0, g[best] - e));
    quotient.push_back(q);
  }
  return series_add(numerator_rec(minimalize(std::move(with_pivot))),
                    numerator_rec(minimalize(std::move(quotient))), e);
}

}  // namespace

std::int64_t HilbertNumerator::series_coefficient(int d) const {
  if (d < 0) return 0;
  const auto n = static_cast<std::int64_t>(denominator_exponent);
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= d; ++k) {
    if (coeffs[k] == 0) continue;
    const std::int64_t m = d - static_cast<std::int64_t>(k);
    // Coefficient of t^m in 1/(1-t)^n.
    const std::int64_t c = n == 0 ? (m == 0 ? 1 : 0) : binomial(m + n - 1, n - 1);
    sum += coeffs[k] * c;
  }
  return sum;
}

MonomialIdeal::MonomialIdeal(std::size_t arity) : arity_(arity) {}

MonomialIdeal::MonomialIdeal(std::size_t arity, std::vector<PowerProduct> generators)
    : arity_(arity) {
  for (const auto& g : generators) {
    if (g.arity() != arity) throw SemanticError("arity mismatch in monomial ideal");
  }
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::whole_ring(std::size_t arity) {
  return MonomialIdeal(arity, {PowerProduct(arity)});
}

bool MonomialIdeal::is_whole_ring() const {
  return gens_.size() == 1 && gens_.front().is_one();
}

int MonomialIdeal::max_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

std::string MonomialIdeal::to_string(const Ring& ring) const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k != 0) out += ", ";
    out += secmat::to_string(gens_[k], ring);
  }
  return out + ")";
}

bool is_member(const PowerProduct& t, const MonomialIdeal& ideal) {
  if (t.arity() != ideal.arity()) throw SemanticError("arity mismatch");
  return kernels::find_divisor(ideal.generators(), t) != kernels::npos;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.arity();
  for (const auto& t : ideal.generators()) {
    for (std::size_t j = 1; j < n; ++j) {
      if (t[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        PowerProduct moved = t;
        moved.set(j, t[j] - 1);
        moved.set(i, t[i] + 1);
        if (!is_member(moved, ideal)) return false;
      }
    }
  }
  return true;
}

MonomialIdeal restrict_to_first_vars(const MonomialIdeal& ideal, std::size_t i) {
  if (i < 1 || i > ideal.arity()) throw SemanticError("restriction index out of range");
  std::vector<PowerProduct> kept;
  for (const auto& g : ideal.generators()) {
    const int last = g.last_variable();
    if (last < static_cast<int>(i)) kept.push_back(g.with_arity(i));
  }
  return MonomialIdeal(i, std::move(kept));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<PowerProduct> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.arity(), std::move(gens));
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<PowerProduct> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& s : a.generators()) {
    for (const auto& t : b.generators()) gens.push_back(s.lcm(t));
  }
  return MonomialIdeal(a.arity(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const PowerProduct& t) {
  std::vector<PowerProduct> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.quotient(g.gcd(t)));
  return MonomialIdeal(ideal.arity(), std::move(gens));
}

MonomialIdeal colon_by_irrelevant(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.arity();
  MonomialIdeal acc = colon(ideal, PowerProduct::variable(n, 0));
  for (std::size_t k = 1; k < n; ++k) {
    acc = ideal_intersection(acc, colon(ideal, PowerProduct::variable(n, k)));
  }
  return acc;
}

MonomialIdeal saturate_monomial(const MonomialIdeal& ideal) {
  MonomialIdeal current = ideal;
  while (true) {
    MonomialIdeal next = colon_by_irrelevant(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

MonomialIdeal drop_last_variable(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.arity();
  std::vector<PowerProduct> gens;
  for (auto g : ideal.generators()) {
    g.set(n - 1, 0);
    gens.push_back(g);
  }
  return MonomialIdeal(n, std::move(gens));
}

HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal) {
  return HilbertNumerator{numerator_rec(ideal.generators()), ideal.arity()};
}

std::int64_t hilbert_function_value(const MonomialIdeal& ideal, int d) {
  return hilbert_numerator(ideal).series_coefficient(d);
}

std::int64_t count_monomials_oracle(const MonomialIdeal& ideal, int d, std::int64_t limit) {
  if (d < 0) return 0;
  const std::size_t n = ideal.arity();
  const std::int64_t total = binomial(d + static_cast<std::int64_t>(n) - 1,
                                      static_cast<std::int64_t>(n) - 1);
  if (total > limit) throw SemanticError("monomial enumeration guard exceeded");
  std::int64_t count = 0;
  PowerProduct t(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == n) {
      t.set(k, left);
      if (kernels::find_divisor(ideal.generators(), t) == kernels::npos) ++count;
      return;
    }
    for (int e = left; e >= 0; --e) {
      t.set(k, e);
      rec(k + 1, left - e);
    }
    t.set(k, 0);
  };
  rec(0, d);
  return count;
}

}  // namespace secmat
