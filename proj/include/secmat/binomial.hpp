#ifndef SECMAT_BINOMIAL_HPP
#define SECMAT_BINOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace secmat {

/// C(top, bottom); zero when bottom < 0 or top < bottom. Throws
/// std::overflow_error when the value does not fit in 64 bits.
std::int64_t binomial(std::int64_t top, std::int64_t bottom);

/// h = C(top_1, i) + C(top_2, i-1) + ... + C(top_k, i-k+1) with
/// top_1 > top_2 > ... > top_k >= i-k+1 >= 1.
struct BinomialExpansion {
  struct Entry {
    std::int64_t top;
    std::int64_t bottom;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::int64_t h = 0;
  std::int64_t i = 0;
  std::vector<Entry> terms;

  std::string to_string() const;
};

/// The unique i-binomial expansion of h, built greedily. Throws
/// SemanticError unless h >= 1 and i >= 1.
BinomialExpansion binomial_expansion(std::int64_t h, std::int64_t i);

/// (h_i)^s_t = sum_k C(top_k + s, bottom_k + t). Throws SemanticError when a
/// shifted bottom index is negative.
std::int64_t expansion_shift(const BinomialExpansion& e, std::int64_t s,
                             std::int64_t t);

/// (h_d)^+_+ with the convention that it is 0 for h = 0.
std::int64_t macaulay_bound(std::int64_t h, std::int64_t d);
/// (h_d)^- with the convention that it is 0 for h = 0.
std::int64_t green_bound(std::int64_t h, std::int64_t d);

}  // namespace secmat

#endif  // SECMAT_BINOMIAL_HPP
