#include "secmat/oracle.hpp"

#include <random>
#include <unordered_map>

#include "secmat/binomial.hpp"
#include "secmat/errors.hpp"
#include "secmat/kernels.hpp"

namespace secmat {

namespace {

using kernels::kPrime;
using ModPoly = std::unordered_map<PowerProduct, std::uint32_t, PowerProductHash>;

std::uint32_t to_mod(const BigInt& v) {
  BigInt r = v % static_cast<unsigned long>(kPrime);
  if (r < 0) r += static_cast<unsigned long>(kPrime);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t to_mod(const BigRational& v) {
  const std::uint32_t den = to_mod(BigInt(v.get_den()));
  if (den == 0) throw SemanticError("coefficient denominator divisible by the oracle prime");
  return kernels::mul_mod(to_mod(BigInt(v.get_num())), kernels::inv_mod(den));
}

ModPoly mod_multiply(const ModPoly& a, const ModPoly& b) {
  ModPoly out;
  for (const auto& [s, cs] : a) {
    for (const auto& [t, ct] : b) {
      auto& slot = out[s * t];
      slot = kernels::reduce_mod(static_cast<std::uint64_t>(slot) +
                                 kernels::mul_mod(cs, ct));
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

std::int64_t sectional_matrix_direct_oracle(const IdealPresentation& ideal, std::size_t i,
                                            int d, std::uint64_t seed) {
  require_homogeneous(ideal);
  const std::size_t n = ideal.arity();
  if (i < 1 || i > n) throw SemanticError("row index out of range");
  if (d < 0) throw SemanticError("negative degree");

  // Images of the variables in K[x_1..x_i].
  std::mt19937_64 gen(seed ^ 0x5eC7'10a1'0facULL);
  std::vector<ModPoly> image(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k < i) {
      image[k][PowerProduct::variable(i, k)] = 1;
      continue;
    }
    for (std::size_t j = 0; j < i; ++j) {
      const auto c = static_cast<std::uint32_t>(gen() % kPrime);
      if (c != 0) image[k][PowerProduct::variable(i, j)] = c;
    }
  }

  std::vector<ModPoly> reduced;
  for (const auto& f : ideal.generators) {
    if (f.degree() > d) continue;
    ModPoly acc;
    for (const auto& t : f.terms()) {
      ModPoly prod{{PowerProduct(i), to_mod(t.coeff)}};
      for (std::size_t k = 0; k < n; ++k) {
        for (int e = 0; e < t.pp[k]; ++e) prod = mod_multiply(prod, image[k]);
      }
      for (const auto& [s, c] : prod) {
        auto& slot = acc[s];
        slot = kernels::reduce_mod(static_cast<std::uint64_t>(slot) + c);
      }
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    if (!acc.empty()) reduced.push_back({std::move(acc)});
  }

  const std::vector<PowerProduct> columns = monomials_of_degree(i, d);
  const auto width = static_cast<std::int64_t>(columns.size());
  std::int64_t rows = 0;
  for (const auto& g : reduced) {
    const int e = g.begin()->first.degree();
    rows += binomial(d - e + static_cast<std::int64_t>(i) - 1, static_cast<std::int64_t>(i) - 1);
  }
  if (rows > 0 && (width > kOracleCellLimit / rows || width > kOracleCellLimit / width)) {
    throw SemanticError("oracle matrix too large: " + std::to_string(rows) + " x " +
                        std::to_string(width));
  }
  std::unordered_map<PowerProduct, std::size_t, PowerProductHash> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c], c);

  // Row echelon form: pivot_of[c] is the stored row whose first nonzero
  // entry (normalized to 1) sits in column c.
  const auto w = static_cast<std::size_t>(width);
  std::vector<std::vector<std::uint32_t>> pivots;
  std::vector<std::int64_t> pivot_of(w, -1);
  std::vector<std::uint32_t> row(w);
  std::int64_t rank = 0;
  for (const auto& g : reduced) {
    const int e = g.begin()->first.degree();
    for (const auto& m : monomials_of_degree(i, d - e)) {
      std::fill(row.begin(), row.end(), 0u);
      for (const auto& [t, c] : g) row[column_of.at(t * m)] = c;
      for (std::size_t c = 0; c < w; ++c) {
        if (row[c] == 0) continue;
        if (pivot_of[c] < 0) {
          const std::uint32_t inv = kernels::inv_mod(row[c]);
          for (std::size_t k = c; k < w; ++k) row[k] = kernels::mul_mod(row[k], inv);
          pivot_of[c] = static_cast<std::int64_t>(pivots.size());
          pivots.push_back(row);
          ++rank;
          break;
        }
        const auto& pivot = pivots[static_cast<std::size_t>(pivot_of[c])];
        kernels::axpy_mod(std::span<std::uint32_t>(row.data() + c, w - c),
                          std::span<const std::uint32_t>(pivot.data() + c, w - c),
                          kPrime - row[c]);
      }
      if (rank == width) return 0;
    }
  }
  return width - rank;
}

}  // namespace secmat
