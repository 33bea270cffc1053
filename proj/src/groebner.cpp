#include "secmat/groebner.hpp"

#include <algorithm>
#include <climits>

#include "secmat/errors.hpp"
#include "secmat/kernels.hpp"

namespace secmat {

namespace {

// Integer polynomial with terms strictly descending under the engine order.
struct WorkPoly {
  std::vector<PowerProduct> pps;
  std::vector<BigInt> cs;

  bool empty() const { return pps.empty(); }
  std::size_t size() const { return pps.size(); }
  int degree() const { return pps.empty() ? -1 : pps.front().degree(); }
};

struct DegRevLexCmp {
  int operator()(const PowerProduct& a, const PowerProduct& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t k = a.arity(); k-- > 0;) {
      if (a[k] != b[k]) return a[k] > b[k] ? -1 : 1;
    }
    return 0;
  }
};

struct DegLexCmp {
  int operator()(const PowerProduct& a, const PowerProduct& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t k = 0; k < a.arity(); ++k) {
      if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    }
    return 0;
  }
};

struct LexCmp {
  int operator()(const PowerProduct& a, const PowerProduct& b) const {
    for (std::size_t k = 0; k < a.arity(); ++k) {
      if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    }
    return 0;
  }
};

// Content of the given coefficient ranges; stops early once it reaches 1.
BigInt content_of(const std::vector<BigInt>& a, std::size_t a_from,
                  const std::vector<BigInt>& b) {
  BigInt g = 0;
  for (std::size_t k = a_from; k < a.size(); ++k) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[k].get_mpz_t());
    if (g == 1) return g;
  }
  for (const auto& c : b) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return g;
  }
  return g;
}

void divide_all(std::vector<BigInt>& cs, std::size_t from, const BigInt& g) {
  for (std::size_t k = from; k < cs.size(); ++k) {
    mpz_divexact(cs[k].get_mpz_t(), cs[k].get_mpz_t(), g.get_mpz_t());
  }
}

void make_primitive(WorkPoly& f) {
  if (f.empty()) return;
  BigInt g = content_of(f.cs, 0, {});
  if (f.cs.front() < 0) g = -g;
  if (g != 1) divide_all(f.cs, 0, g);
}

template <class Cmp>
class Engine {
 public:
  struct Reducers {
    std::vector<PowerProduct> lts;
    std::vector<const WorkPoly*> polys;
  };

  Engine(RingPtr ring, TermOrder order) : ring_(std::move(ring)), order_(order) {}

  WorkPoly from_polynomial(const Polynomial& f) const {
    BigInt den = 1;
    for (const auto& t : f.terms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    std::vector<std::size_t> idx(f.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return cmp_(f.terms()[a].pp, f.terms()[b].pp) > 0;
    });
    WorkPoly w;
    w.pps.reserve(f.size());
    w.cs.reserve(f.size());
    for (std::size_t k : idx) {
      const auto& t = f.terms()[k];
      w.pps.push_back(t.pp);
      w.cs.push_back(BigInt(t.coeff.get_num() * (den / t.coeff.get_den())));
    }
    return w;
  }

  Polynomial to_polynomial(const WorkPoly& w, const BigRational& divisor = 1) const {
    std::vector<Term> terms;
    terms.reserve(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
      terms.push_back(Term{w.pps[k], BigRational(w.cs[k]) / divisor});
    }
    return Polynomial(ring_, std::move(terms), order_);
  }

  // a * f[f_from..] - b * m * g[g_from..]
  WorkPoly combine(const BigInt& a, const WorkPoly& f, std::size_t f_from,
                   const BigInt& b, const PowerProduct& m, const WorkPoly& g,
                   std::size_t g_from) const {
    WorkPoly out;
    out.pps.reserve(f.size() - f_from + g.size() - g_from);
    out.cs.reserve(out.pps.capacity());
    std::size_t i = f_from;
    std::size_t j = g_from;
    PowerProduct shifted;
    bool have_shifted = false;
    BigInt tmp;
    while (i < f.size() || j < g.size()) {
      if (j < g.size() && !have_shifted) {
        shifted = g.pps[j] * m;
        have_shifted = true;
      }
      int c;
      if (i == f.size()) {
        c = -1;
      } else if (j == g.size()) {
        c = 1;
      } else {
        c = cmp_(f.pps[i], shifted);
      }
      if (c > 0) {
        out.pps.push_back(f.pps[i]);
        mpz_mul(tmp.get_mpz_t(), a.get_mpz_t(), f.cs[i].get_mpz_t());
        out.cs.push_back(tmp);
        ++i;
      } else if (c < 0) {
        out.pps.push_back(shifted);
        mpz_mul(tmp.get_mpz_t(), b.get_mpz_t(), g.cs[j].get_mpz_t());
        mpz_neg(tmp.get_mpz_t(), tmp.get_mpz_t());
        out.cs.push_back(tmp);
        ++j;
        have_shifted = false;
      } else {
        mpz_mul(tmp.get_mpz_t(), a.get_mpz_t(), f.cs[i].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), g.cs[j].get_mpz_t());
        if (tmp != 0) {
          out.pps.push_back(shifted);
          out.cs.push_back(tmp);
        }
        ++i;
        ++j;
        have_shifted = false;
      }
    }
    return out;
  }

  // Full reduction. On return, result = scale * (true remainder of f).
  WorkPoly reduce(WorkPoly f, const Reducers& reducers, BigRational* scale) const {
    WorkPoly r;
    std::size_t head = 0;
    BigInt a;
    BigInt b;
    BigInt g;
    while (head < f.size()) {
      const std::size_t hit = kernels::find_divisor(reducers.lts, f.pps[head]);
      if (hit == kernels::npos) {
        r.pps.push_back(f.pps[head]);
        r.cs.push_back(std::move(f.cs[head]));
        ++head;
        continue;
      }
      const WorkPoly& red = *reducers.polys[hit];
      const PowerProduct m = f.pps[head].quotient(red.pps.front());
      mpz_gcd(g.get_mpz_t(), red.cs.front().get_mpz_t(), f.cs[head].get_mpz_t());
      mpz_divexact(a.get_mpz_t(), red.cs.front().get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), f.cs[head].get_mpz_t(), g.get_mpz_t());
      if (a < 0) {
        a = -a;
        b = -b;
      }
      f = combine(a, f, head + 1, b, m, red, 1);
      head = 0;
      if (a != 1) {
        for (auto& c : r.cs) c *= a;
        if (scale != nullptr) *scale *= a;
      }
      const BigInt content = content_of(f.cs, 0, r.cs);
      if (content > 1) {
        divide_all(f.cs, 0, content);
        divide_all(r.cs, 0, content);
        if (scale != nullptr) *scale /= content;
      }
    }
    return r;
  }

  WorkPoly spoly(const WorkPoly& f, const WorkPoly& g) const {
    const PowerProduct l = f.pps.front().lcm(g.pps.front());
    BigInt common;
    mpz_gcd(common.get_mpz_t(), f.cs.front().get_mpz_t(), g.cs.front().get_mpz_t());
    const BigInt a = g.cs.front() / common;
    const BigInt b = f.cs.front() / common;
    // a * (l / lt f) * f - b * (l / lt g) * g; the first factor is applied
    // by shifting f up front.
    WorkPoly fs;
    const PowerProduct mf = l.quotient(f.pps.front());
    fs.pps.reserve(f.size());
    for (const auto& t : f.pps) fs.pps.push_back(t * mf);
    fs.cs = f.cs;
    WorkPoly s = combine(a, fs, 1, b, l.quotient(g.pps.front()), g, 1);
    make_primitive(s);
    return s;
  }

  GroebnerBasis run(const IdealPresentation& ideal, std::optional<int> cap) {
    std::vector<WorkPoly> inputs;
    for (const auto& gen : ideal.generators) {
      WorkPoly w = from_polynomial(gen);
      make_primitive(w);
      inputs.push_back(std::move(w));
    }
    std::stable_sort(inputs.begin(), inputs.end(), [](const WorkPoly& x, const WorkPoly& y) {
      return x.degree() < y.degree();
    });
    std::size_t pending = 0;

    while (true) {
      int d = INT_MAX;
      if (pending < inputs.size()) d = inputs[pending].degree();
      for (const auto& p : pairs_) d = std::min(d, p.lcm.degree());
      if (d == INT_MAX) break;
      if (cap && d > *cap) break;

      std::vector<Pair> batch;
      std::vector<Pair> rest;
      for (auto& p : pairs_) (p.lcm.degree() == d ? batch : rest).push_back(std::move(p));
      pairs_ = std::move(rest);
      std::sort(batch.begin(), batch.end(), [this](const Pair& x, const Pair& y) {
        const int c = cmp_(x.lcm, y.lcm);
        if (c != 0) return c < 0;
        return std::pair(x.i, x.j) < std::pair(y.i, y.j);
      });

      std::vector<WorkPoly> todo;
      todo.reserve(batch.size());
      for (const auto& p : batch) todo.push_back(spoly(polys_[p.i], polys_[p.j]));
      while (pending < inputs.size() && inputs[pending].degree() == d) {
        todo.push_back(std::move(inputs[pending++]));
      }
      for (auto& s : todo) {
        WorkPoly h = reduce(std::move(s), all_, nullptr);
        if (h.empty()) continue;
        make_primitive(h);
        insert(std::move(h));
      }
    }
    return finish(cap);
  }

  bool all_spolys_reduce(const std::vector<WorkPoly>& basis) const {
    Reducers reducers = reducers_of(basis);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        if (!reduce(spoly(basis[i], basis[j]), reducers, nullptr).empty()) return false;
      }
    }
    return true;
  }

  static Reducers reducers_of(const std::vector<WorkPoly>& basis) {
    Reducers r;
    for (const auto& w : basis) {
      if (w.empty()) continue;
      r.lts.push_back(w.pps.front());
      r.polys.push_back(&w);
    }
    return r;
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    PowerProduct lcm;
  };

  void insert(WorkPoly h) {
    const std::size_t hi = polys_.size();
    const PowerProduct& lth = h.pps.front();

    // Gebauer-Moeller update.
    struct Candidate {
      std::size_t g;
      PowerProduct lcm;
      bool coprime;
    };
    std::vector<Candidate> fresh;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (!active_[g]) continue;
      const PowerProduct& ltg = polys_[g].pps.front();
      fresh.push_back({g, lth.lcm(ltg), lth.coprime(ltg)});
    }
    std::vector<char> kept(fresh.size(), 0);
    std::vector<char> dropped(fresh.size(), 0);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool keep = fresh[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < fresh.size(); ++b) {
          if (b == a || dropped[b]) continue;
          // Pairs still in C (b > a, not yet visited) or already kept in D.
          if ((b > a || kept[b]) && fresh[b].lcm.divides(fresh[a].lcm)) {
            keep = false;
            break;
          }
        }
      }
      if (keep) {
        kept[a] = 1;
      } else {
        dropped[a] = 1;
      }
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + fresh.size());
    for (auto& p : pairs_) {
      if (lth.divides(p.lcm)) {
        const PowerProduct& lti = polys_[p.i].pps.front();
        const PowerProduct& ltj = polys_[p.j].pps.front();
        if (!(lti.lcm(lth) == p.lcm) && !(ltj.lcm(lth) == p.lcm)) continue;
      }
      next.push_back(std::move(p));
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (kept[a] && !fresh[a].coprime) next.push_back({fresh[a].g, hi, fresh[a].lcm});
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g] && lth.divides(polys_[g].pps.front())) active_[g] = 0;
    }
    polys_.push_back(std::move(h));
    active_.push_back(1);
    // polys_ may have reallocated; rebuild pointers.
    all_.lts.push_back(polys_.back().pps.front());
    all_.polys.clear();
    for (const auto& w : polys_) all_.polys.push_back(&w);
  }

  GroebnerBasis finish(std::optional<int> cap) {
    std::vector<WorkPoly> basis;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g]) basis.push_back(polys_[g]);
    }
    std::sort(basis.begin(), basis.end(), [this](const WorkPoly& x, const WorkPoly& y) {
      return cmp_(x.pps.front(), y.pps.front()) < 0;
    });
    const Reducers reducers = reducers_of(basis);
    std::vector<WorkPoly> reduced;
    reduced.reserve(basis.size());
    for (const auto& g : basis) {
      WorkPoly tail;
      tail.pps.assign(g.pps.begin() + 1, g.pps.end());
      tail.cs.assign(g.cs.begin() + 1, g.cs.end());
      BigRational scale = 1;
      WorkPoly r = reduce(std::move(tail), reducers, &scale);
      WorkPoly out;
      out.pps.push_back(g.pps.front());
      out.cs.push_back(g.cs.front() * scale.get_num());
      for (std::size_t k = 0; k < r.size(); ++k) {
        out.pps.push_back(r.pps[k]);
        out.cs.push_back(r.cs[k] * scale.get_den());
      }
      make_primitive(out);
      reduced.push_back(std::move(out));
    }
    GroebnerBasis gb{ring_, order_, {}, cap};
    for (const auto& w : reduced) gb.elements.push_back(to_polynomial(w));
    return gb;
  }

  RingPtr ring_;
  TermOrder order_;
  Cmp cmp_{};
  std::vector<WorkPoly> polys_;
  std::vector<char> active_;
  std::vector<Pair> pairs_;
  Reducers all_;
};

template <class Fn>
decltype(auto) with_engine(const RingPtr& ring, TermOrder order, Fn&& fn) {
  switch (order) {
    case TermOrder::Lex: {
      Engine<LexCmp> e(ring, order);
      return fn(e);
    }
    case TermOrder::DegLex: {
      Engine<DegLexCmp> e(ring, order);
      return fn(e);
    }
    case TermOrder::DegRevLex:
      break;
  }
  Engine<DegRevLexCmp> e(ring, order);
  return fn(e);
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       TermOrder order) {
  for (const auto& g : basis) {
    if (!same_ring(g.ring(), f.ring())) throw SemanticError("ring mismatch");
  }
  return with_engine(f.ring(), order, [&](auto& engine) {
    std::vector<WorkPoly> work;
    for (const auto& g : basis) {
      if (!g.is_zero()) work.push_back(engine.from_polynomial(g));
    }
    const auto reducers = std::decay_t<decltype(engine)>::reducers_of(work);
    // from_polynomial scales f by the lcm of its denominators.
    BigInt den = 1;
    for (const auto& t : f.terms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    BigRational scale(den);
    WorkPoly r = engine.reduce(engine.from_polynomial(f), reducers, &scale);
    return engine.to_polynomial(r, scale);
  });
}

GroebnerBasis buchberger(const IdealPresentation& ideal, TermOrder order,
                         std::optional<int> degree_cap) {
  if (degree_cap && !ideal.is_homogeneous()) {
    throw SemanticError("a degree cap requires homogeneous generators");
  }
  return with_engine(ideal.ring, order,
                     [&](auto& engine) { return engine.run(ideal, degree_cap); });
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  return with_engine(basis.ring, basis.order, [&](auto& engine) {
    std::vector<WorkPoly> work;
    for (const auto& g : basis.elements) work.push_back(engine.from_polynomial(g));
    return engine.all_spolys_reduce(work);
  });
}

MonomialIdeal leading_term_ideal(const GroebnerBasis& basis) {
  if (basis.degree_cap) {
    throw SemanticError("leading term ideal of a degree-capped basis is undefined");
  }
  std::vector<PowerProduct> lts;
  for (const auto& g : basis.elements) lts.push_back(g.with_order(basis.order).leading_pp());
  return MonomialIdeal(basis.ring->arity(), std::move(lts));
}

IdealPresentation truncation_ideal(const IdealPresentation& ideal, int delta) {
  require_homogeneous(ideal);
  if (delta < 0) throw SemanticError("truncation degree must be non-negative");
  GroebnerBasis capped = buchberger(ideal, TermOrder::DegRevLex, delta);
  return IdealPresentation(ideal.ring, std::move(capped.elements));
}

bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f) {
  if (basis.degree_cap) throw SemanticError("membership needs a full basis");
  return normal_form(f, basis.elements, basis.order).is_zero();
}

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b) {
  if (!same_ring(a.ring, b.ring)) throw SemanticError("ring mismatch");
  const GroebnerBasis ga = buchberger(a, TermOrder::DegRevLex);
  const GroebnerBasis gb = buchberger(b, TermOrder::DegRevLex);
  for (const auto& f : b.generators) {
    if (!ideal_contains(ga, f)) return false;
  }
  for (const auto& f : a.generators) {
    if (!ideal_contains(gb, f)) return false;
  }
  return true;
}

}  // namespace secmat
