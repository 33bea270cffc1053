#include "secmat/gin.hpp"

#include <future>
#include <random>

#include "secmat/errors.hpp"
#include "secmat/groebner.hpp"

namespace secmat {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// std::uniform_int_distribution is implementation defined; this keeps the
// matrices identical across standard libraries.
std::int64_t uniform_entry(std::mt19937_64& gen) {
  constexpr std::uint64_t range = 2 * kMatrixEntryBound + 1;
  constexpr std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t u;
  do {
    u = gen();
  } while (u >= limit);
  return static_cast<std::int64_t>(u % range) - kMatrixEntryBound;
}

MonomialIdeal run_trial(const IdealPresentation& ideal, std::uint64_t seed, int trial) {
  const IntMatrix g = random_invertible_matrix(ideal.arity(), trial_seed(seed, trial));
  return leading_ideal_after_change(ideal, g);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(trial));
}

IntMatrix random_invertible_matrix(std::size_t n, std::uint64_t stream_seed) {
  std::mt19937_64 gen(stream_seed);
  while (true) {
    IntMatrix m(n, std::vector<BigInt>(n));
    for (auto& row : m) {
      for (auto& e : row) e = static_cast<long>(uniform_entry(gen));
    }
    if (determinant(m) != 0) return m;
  }
}

MonomialIdeal leading_ideal_after_change(const IdealPresentation& ideal,
                                         const IntMatrix& g) {
  std::vector<Polynomial> moved;
  moved.reserve(ideal.generators.size());
  for (const auto& f : ideal.generators) moved.push_back(apply_linear_change(f, g));
  const GroebnerBasis gb =
      buchberger(IdealPresentation(ideal.ring, std::move(moved)), TermOrder::DegRevLex);
  return leading_term_ideal(gb);
}

GinResult rgin(const IdealPresentation& ideal, std::uint64_t seed) {
  require_homogeneous(ideal);
  GinResult result;
  result.seed = seed;
  for (int pair = 0; pair < kMaxTrialPairs; ++pair) {
    const int first = 2 * pair;
    auto other = std::async(std::launch::async,
                            [&ideal, seed, first] { return run_trial(ideal, seed, first + 1); });
    MonomialIdeal a = run_trial(ideal, seed, first);
    MonomialIdeal b = other.get();
    result.trials_used = first + 2;
    if (a == b) {
      if (!is_strongly_stable(a)) {
        throw InvariantViolation("rgin " + a.to_string(*ideal.ring) + " is not strongly stable");
      }
      result.rgin = std::move(a);
      result.agreed = true;
      return result;
    }
  }
  throw GenericityError("genericity not reached: " + std::to_string(kMaxTrialPairs) +
                        " pairs of random coordinate changes disagreed (seed " +
                        std::to_string(seed) + ")");
}

int regularity(const MonomialIdeal& gin) { return gin.max_degree(); }

int regularity(const IdealPresentation& ideal, std::uint64_t seed) {
  return regularity(rgin(ideal, seed).rgin);
}

bool is_saturated(const MonomialIdeal& gin) {
  const std::size_t last = gin.arity() - 1;
  for (const auto& t : gin.generators()) {
    if (t[last] > 0) return false;
  }
  return true;
}

bool is_saturated(const IdealPresentation& ideal, std::uint64_t seed) {
  return is_saturated(rgin(ideal, seed).rgin);
}

}  // namespace secmat
