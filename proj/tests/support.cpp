#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace secmat::test {

std::string fixture_path(std::string_view name) {
  return std::string(SECMAT_FIXTURES) + "/" + std::string(name) + ".ideal";
}

bool fixture_exists(std::string_view name) {
  return std::filesystem::exists(fixture_path(name));
}

InputDocument load_fixture(std::string_view name) {
  std::ifstream in(fixture_path(name));
  std::stringstream text;
  text << in.rdbuf();
  return parse_document(text.str());
}

MonomialIdeal monomials(const RingPtr& ring, std::string_view list) {
  std::vector<PowerProduct> gens;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string_view piece =
        list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    gens.push_back(parse_polynomial(piece, ring).leading_pp());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return MonomialIdeal(ring->arity(), std::move(gens));
}

Rows prefix(const Rows& rows, std::size_t columns) {
  Rows out;
  for (const auto& r : rows) {
    out.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(std::min(columns, r.size())));
  }
  return out;
}

RingPtr standard_ring(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "t", "u", "v", "w", "s"};
  std::vector<std::string> v(names, names + n);
  return make_ring(v);
}

namespace {

PowerProduct random_monomial(std::mt19937_64& gen, std::size_t n, int degree) {
  PowerProduct t(n);
  for (int k = 0; k < degree; ++k) {
    const std::size_t v = gen() % n;
    t.set(v, t[v] + 1);
  }
  return t;
}

BigRational random_coefficient(std::mt19937_64& gen, int bound) {
  long c = 0;
  while (c == 0) c = static_cast<long>(gen() % (2 * bound + 1)) - bound;
  return BigRational(c);
}

}  // namespace

Polynomial random_polynomial(std::mt19937_64& gen, const RingPtr& ring, int max_degree,
                             int max_terms, int coeff_bound) {
  std::vector<Term> terms;
  const int count = static_cast<int>(gen() % (max_terms + 1));
  for (int k = 0; k < count; ++k) {
    const int degree = static_cast<int>(gen() % (max_degree + 1));
    terms.push_back({random_monomial(gen, ring->arity(), degree), random_coefficient(gen, coeff_bound)});
  }
  return Polynomial(ring, std::move(terms));
}

Polynomial random_homogeneous(std::mt19937_64& gen, const RingPtr& ring, int degree, int terms,
                              int coeff_bound) {
  while (true) {
    std::vector<Term> t;
    for (int k = 0; k < terms; ++k) {
      t.push_back({random_monomial(gen, ring->arity(), degree), random_coefficient(gen, coeff_bound)});
    }
    Polynomial p(ring, std::move(t));
    if (!p.is_zero()) return p;
  }
}

std::vector<IdealPresentation> random_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<IdealPresentation> out;
  while (out.size() < count) {
    const std::size_t n = 2 + gen() % 3;
    const RingPtr ring = standard_ring(n);
    const int gens = 1 + static_cast<int>(gen() % 4);
    std::vector<Polynomial> polys;
    for (int k = 0; k < gens; ++k) {
      const int degree = 1 + static_cast<int>(gen() % 5);
      const int terms = 1 + static_cast<int>(gen() % 3);
      polys.push_back(random_homogeneous(gen, ring, degree, terms, 9));
    }
    out.emplace_back(ring, std::move(polys));
  }
  return out;
}

std::int64_t count_standard_monomials(const MonomialIdeal& j, std::size_t vars, int d) {
  std::int64_t count = 0;
  std::vector<int> e(j.arity(), 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t k, int left) {
    if (k + 1 == vars) {
      e[k] = left;
      bool inside = false;
      for (const auto& g : j.generators()) {
        bool divides = true;
        for (std::size_t v = 0; v < j.arity() && divides; ++v) divides = g[v] <= e[v];
        if (divides) {
          inside = true;
          break;
        }
      }
      if (!inside) ++count;
      e[k] = 0;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[k] = a;
      walk(k + 1, left - a);
    }
    e[k] = 0;
  };
  if (vars == 0) return d == 0 && !j.is_whole_ring() ? 1 : 0;
  walk(0, d);
  return count;
}

std::vector<std::string> published_fixtures() {
  return {"ex_first",    "ex_conca",    "rgin_remark", "ex_regexampletrunc", "ex_before_reg",
          "ex_dim_deg",  "ex_gcd",      "ex_robbiano", "ex_saturated_five",  "ex_8_1_I",
          "ex_8_1_J",    "ex_8_2_I",    "ex_8_2_J",    "ex_8_3_I",           "ex_8_3_J",
          "ex_8_4_I"};
}

}  // namespace secmat::test
