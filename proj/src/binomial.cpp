#include "secmat/binomial.hpp"

#include <stdexcept>

#include "secmat/errors.hpp"

namespace secmat {

std::int64_t binomial(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0 || top < bottom) return 0;
  if (bottom > top - bottom) bottom = top - bottom;
  __int128 value = 1;
  for (std::int64_t k = 1; k <= bottom; ++k) {
    // value * (top - bottom + k) is divisible by k at every step.
    value = value * (top - bottom + k) / k;
    if (value > INT64_MAX) throw std::overflow_error("binomial coefficient overflow");
  }
  return static_cast<std::int64_t>(value);
}

std::string BinomialExpansion::to_string() const {
  std::string out = std::to_string(h) + " =";
  for (std::size_t k = 0; k < terms.size(); ++k) {
    out += (k == 0 ? " " : " + ");
    out += "C(" + std::to_string(terms[k].top) + "," + std::to_string(terms[k].bottom) + ")";
  }
  return out;
}

BinomialExpansion binomial_expansion(std::int64_t h, std::int64_t i) {
  if (h < 1) throw SemanticError("binomial expansion needs h >= 1");
  if (i < 1) throw SemanticError("binomial expansion needs i >= 1");
  BinomialExpansion e{h, i, {}};
  std::int64_t rest = h;
  for (std::int64_t bottom = i; bottom >= 1 && rest > 0; --bottom) {
    // Largest top with C(top, bottom) <= rest; top >= bottom since
    // C(bottom, bottom) = 1 <= rest.
    std::int64_t top = bottom;
    if (bottom == 1) {
      top = rest;
    } else {
      while (binomial(top + 1, bottom) <= rest) ++top;
    }
    e.terms.push_back({top, bottom});
    rest -= binomial(top, bottom);
  }
  return e;
}

std::int64_t expansion_shift(const BinomialExpansion& e, std::int64_t s,
                             std::int64_t t) {
  std::int64_t sum = 0;
  for (const auto& term : e.terms) {
    if (term.bottom + t < 0) throw SemanticError("negative bottom index in expansion shift");
    sum += binomial(term.top + s, term.bottom + t);
  }
  return sum;
}

std::int64_t macaulay_bound(std::int64_t h, std::int64_t d) {
  return h == 0 ? 0 : expansion_shift(binomial_expansion(h, d), 1, 1);
}

std::int64_t green_bound(std::int64_t h, std::int64_t d) {
  return h == 0 ? 0 : expansion_shift(binomial_expansion(h, d), -1, 0);
}

}  // namespace secmat
