#ifndef SECMAT_GROEBNER_HPP
#define SECMAT_GROEBNER_HPP

#include <optional>
#include <span>
#include <vector>

#include "secmat/monomial_ideal.hpp"
#include "secmat/polynomial.hpp"

namespace secmat {

/// Reduced Groebner basis. Elements are primitive integer polynomials with
/// positive leading coefficient, sorted by increasing leading term. With a
/// degree cap D the elements span I_d for every d <= D but nothing is
/// claimed above D.
struct GroebnerBasis {
  RingPtr ring;
  TermOrder order = TermOrder::DegRevLex;
  std::vector<Polynomial> elements;
  std::optional<int> degree_cap;
};

/// Full reduction of f modulo the leading terms of `basis`: no term of the
/// result is divisible by a leading term and f - result lies in the ideal
/// generated by `basis`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       TermOrder order);

/// Buchberger's algorithm with the normal selection strategy (pairs of
/// lowest lcm degree first), Gebauer-Moeller pair criteria and
/// content-cleared integer reductions. Input generators enter degree by
/// degree, which makes `degree_cap` sound for homogeneous input.
GroebnerBasis buchberger(const IdealPresentation& ideal, TermOrder order,
                         std::optional<int> degree_cap = std::nullopt);

/// True when every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

/// Minimal generators of LT(I). Throws SemanticError for a capped basis.
MonomialIdeal leading_term_ideal(const GroebnerBasis& basis);

/// Generators of <I_{<= delta}>: the elements of a delta-capped basis. The
/// result is the zero ideal (no generators) when I_d = 0 for all d <= delta.
IdealPresentation truncation_ideal(const IdealPresentation& ideal, int delta);

/// f in <basis-generated ideal>, via reduction to zero modulo a full basis.
bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f);

/// Equality of ideals by mutual membership of generators.
bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b);

}  // namespace secmat

#endif  // SECMAT_GROEBNER_HPP
