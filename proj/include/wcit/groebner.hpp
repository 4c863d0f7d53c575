#pragma once

// Groebner bases in grevlex order: normal forms, Buchberger completion with the
// Gebauer-Moeller pair criteria, standard-monomial bases of bigraded pieces of
// quotient rings, and Hilbert series of monomial ideals.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "error.hpp"
#include "poly.hpp"

namespace wcit {

/// Skip S-pairs whose lcm has positive weight above `max_weight`. The result
/// is then a Groebner basis only up to that weight, which suffices for every
/// graded piece lying below it.
struct TruncationBound {
  std::vector<long> weights; // one positive weight per variable
  long max_weight = 0;

  long weight(const Monomial& m) const {
    long s = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * m[i];
    return s;
  }

  /// Bound covering every bigraded piece (a, b) with a <= max_d1, b <= max_d2.
  static TruncationBound for_bidegrees(const Grading& g, long max_d1, long max_d2) {
    TruncationBound t;
    const long k = g.positive_shift();
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto& b = g.variable(i);
      t.weights.push_back(b.d2 + k * b.d1);
    }
    t.max_weight = max_d2 + k * max_d1;
    return t;
  }
};

struct BuchbergerOptions {
  std::optional<TruncationBound> truncation;
  /// When set, the basis records whether all generators are bihomogeneous.
  const Grading* grading = nullptr;
};

template <class F>
class GroebnerBasis {
public:
  GroebnerBasis(RingPtr<F> ring, std::vector<Polynomial<F>> gens, bool bihomogeneous,
                bool truncated)
      : ring_(std::move(ring)), gens_(std::move(gens)), bihomogeneous_(bihomogeneous),
        truncated_(truncated) {}

  const RingPtr<F>& ring() const noexcept { return ring_; }
  const std::vector<Polynomial<F>>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool bihomogeneous() const noexcept { return bihomogeneous_; }
  bool truncated() const noexcept { return truncated_; }

  std::vector<Monomial> lead_monomials() const {
    std::vector<Monomial> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.lead_monomial());
    return out;
  }

  bool is_unit() const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [](const auto& g) { return g.lead_monomial().is_one(); });
  }

  /// Standard monomial: not divisible by any lead term.
  bool is_standard(const Monomial& m) const {
    for (const auto& g : gens_)
      if (g.lead_monomial().divides(m)) return false;
    return true;
  }

private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  bool bihomogeneous_;
  bool truncated_;
};

namespace detail {

/// Full reduction of p by a list of monic polynomials.
template <class F>
Polynomial<F> reduce_by(const Polynomial<F>& p, const std::vector<const Polynomial<F>*>& reducers) {
  using Element = typename F::Element;
  using Term = typename Polynomial<F>::Term;
  if (p.is_zero() || reducers.empty()) return p;
  std::map<Monomial, Element, GrevlexGreater> work;
  for (const auto& t : p.terms()) work.emplace(t.mono, t.coeff);
  std::vector<Term> rest;
  while (!work.empty()) {
    auto it = work.begin();
    const Polynomial<F>* red = nullptr;
    for (const auto* g : reducers)
      if (g->lead_monomial().divides(it->first)) {
        red = g;
        break;
      }
    if (!red) {
      rest.push_back({it->first, it->second});
      work.erase(it);
      continue;
    }
    Monomial q = it->first / red->lead_monomial();
    Element c = it->second; // reducers are monic
    work.erase(it);
    const auto& terms = red->terms();
    for (std::size_t k = 1; k < terms.size(); ++k) {
      Monomial m = terms[k].mono * q;
      Element delta = c * terms[k].coeff;
      auto jt = work.find(m);
      if (jt == work.end()) {
        work.emplace(std::move(m), -delta);
      } else {
        jt->second -= delta;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  return Polynomial<F>::from_sorted(p.ring(), std::move(rest));
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  Monomial l = Monomial::lcm(f.lead_monomial(), g.lead_monomial());
  auto a = f.times_term(l / f.lead_monomial(), g.lead_coeff());
  auto b = g.times_term(l / g.lead_monomial(), f.lead_coeff());
  return a - b;
}

} // namespace detail

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& p, const GroebnerBasis<F>& G) {
  if (!same_ring(p.ring(), G.ring())) throw FieldMismatch("normal_form: ring or order mismatch");
  std::vector<const Polynomial<F>*> reducers;
  for (const auto& g : G.generators()) reducers.push_back(&g);
  return detail::reduce_by(p, reducers);
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  return detail::s_polynomial(f, g);
}

/// Reduced Groebner basis (monic, sorted by ascending lead monomial).
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, const RingPtr<F>& ring,
                            const BuchbergerOptions& opts = {}) {
  for (const auto& g : gens)
    if (!same_ring(g.ring(), ring)) throw FieldMismatch("buchberger: generators from another ring");

  bool bihom = false;
  if (opts.grading) {
    bihom = std::all_of(gens.begin(), gens.end(), [&](const auto& g) {
      return g.is_zero() || bihomogeneous_degree(g, *opts.grading).has_value();
    });
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Polynomial<F>> basis;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto reducers = [&] {
    std::vector<const Polynomial<F>*> r;
    for (const auto& b : basis) r.push_back(&b);
    return r;
  };

  // Gebauer-Moeller update with the new element h = basis.back().
  auto update = [&] {
    const std::size_t hi = basis.size() - 1;
    const Monomial& lh = basis[hi].lead_monomial();
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g]) fresh.push_back({g, hi, Monomial::lcm(basis[g].lead_monomial(), lh)});

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const auto& p = fresh[a];
      bool coprime = Monomial::coprime(basis[p.i].lead_monomial(), lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < fresh.size() && !dominated; ++b)
          dominated = fresh[b].lcm.divides(p.lcm);
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b)
          dominated = kept[b].lcm.divides(p.lcm);
      }
      if (coprime || !dominated) kept.push_back(p);
    }
    std::erase_if(kept, [&](const Pair& p) {
      return Monomial::coprime(basis[p.i].lead_monomial(), lh);
    });

    std::erase_if(pairs, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      Monomial l1 = Monomial::lcm(basis[p.i].lead_monomial(), lh);
      Monomial l2 = Monomial::lcm(basis[p.j].lead_monomial(), lh);
      return !(l1 == p.lcm) && !(l2 == p.lcm);
    });
    for (auto& p : kept) pairs.push_back(std::move(p));

    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && lh.divides(basis[g].lead_monomial())) active[g] = false;
  };

  auto add = [&](Polynomial<F> h) {
    basis.push_back(h.monic());
    active.push_back(true);
    update();
  };

  // Process input generators smallest lead first.
  std::vector<Polynomial<F>> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(g);
  std::sort(input.begin(), input.end(), [](const auto& a, const auto& b) {
    return grevlex_compare(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  for (const auto& g : input) {
    auto h = detail::reduce_by(g, reducers());
    if (!h.is_zero()) add(std::move(h));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return grevlex_compare(a.lcm, b.lcm) < 0;
    });
    Pair p = *best;
    pairs.erase(best);
    if (opts.truncation && opts.truncation->weight(p.lcm) > opts.truncation->max_weight) continue;
    auto s = detail::s_polynomial(basis[p.i], basis[p.j]);
    auto h = detail::reduce_by(s, reducers());
    if (!h.is_zero()) add(std::move(h));
  }

  // Inter-reduce the minimal elements.
  std::vector<Polynomial<F>> minimal;
  for (std::size_t g = 0; g < basis.size(); ++g)
    if (active[g]) minimal.push_back(basis[g]);
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    return grevlex_compare(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  // Equal leads cannot survive the activity filter, but guard anyway.
  minimal.erase(std::unique(minimal.begin(), minimal.end(),
                            [](const auto& a, const auto& b) {
                              return a.lead_monomial() == b.lead_monomial();
                            }),
                minimal.end());
  std::vector<Polynomial<F>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t g = 0; g < minimal.size(); ++g) {
    std::vector<const Polynomial<F>*> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != g) others.push_back(&minimal[k]);
    const auto& lead = minimal[g].lead();
    auto tail = Polynomial<F>::from_sorted(
        ring, std::vector<typename Polynomial<F>::Term>(minimal[g].terms().begin() + 1,
                                                        minimal[g].terms().end()));
    auto head = Polynomial<F>::term(ring, lead.mono, lead.coeff);
    reduced.push_back((head + detail::reduce_by(tail, others)).monic());
  }
  return GroebnerBasis<F>(ring, std::move(reduced), bihom, opts.truncation.has_value());
}

/// True iff every variable has a pure power in the lead ideal. For a
/// (weighted-)homogeneous ideal this says its zero set is the origin alone.
template <class F>
bool cone_is_origin_only(const GroebnerBasis<F>& G) {
  if (G.is_unit()) return true;
  const std::size_t n = G.ring()->nvars();
  std::vector<bool> seen(n, false);
  for (const auto& m : G.lead_monomials())
    if (auto v = m.pure_power_variable()) seen[*v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// ---------------------------------------------------------------------------
// Graded pieces

namespace detail {

/// All exponent vectors on `vars` with sum of weight*exponent == target,
/// written into a full-length monomial template.
inline void enumerate_weighted(const std::vector<std::size_t>& vars, const std::vector<long>& weights,
                               std::size_t pos, long remaining, std::vector<int>& ex,
                               std::vector<Monomial>& out) {
  if (pos == vars.size()) {
    if (remaining == 0) out.emplace_back(ex);
    return;
  }
  const long w = weights[pos];
  for (int e = 0; long(e) * w <= remaining; ++e) {
    ex[vars[pos]] = e;
    enumerate_weighted(vars, weights, pos + 1, remaining - long(e) * w, ex, out);
  }
  ex[vars[pos]] = 0;
}

} // namespace detail

/// All monomials of the given bidegree. Finite because deg1 = a fixes the
/// auxiliary part to finitely many choices, each pinning the geometric weight.
inline std::vector<Monomial> monomials_of_bidegree(const Grading& g, BiDegree target) {
  if (target.d1 < 0) throw DomainError("bidegree with negative first degree " + target.to_string());
  std::vector<Monomial> out;
  const auto& geo = g.geometric();
  const auto& aux = g.auxiliary();
  std::vector<long> geo_w;
  for (auto i : geo) geo_w.push_back(g.variable(i).d2);
  std::vector<int> ex(g.size(), 0);

  std::vector<Monomial> aux_parts;
  std::vector<long> ones(aux.size(), 1);
  detail::enumerate_weighted(aux, ones, 0, target.d1, ex, aux_parts);
  for (const auto& a : aux_parts) {
    long xw = target.d2 - g.of(a).d2;
    if (xw < 0) continue;
    std::vector<int> base = a.exponents();
    std::vector<Monomial> xs;
    detail::enumerate_weighted(geo, geo_w, 0, xw, base, xs);
    for (auto& m : xs) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

/// Standard monomials of the given bidegree, descending grevlex. Their classes
/// form a basis of that piece of the quotient by G.
template <class F>
std::vector<Monomial> graded_piece_basis(const GroebnerBasis<F>& G, BiDegree target,
                                         const Grading& grading) {
  auto all = monomials_of_bidegree(grading, target);
  std::vector<Monomial> out;
  for (auto& m : all)
    if (G.is_standard(m)) out.push_back(std::move(m));
  return out;
}

template <class F>
std::vector<Monomial> graded_piece_basis(const GroebnerBasis<F>& G, BiDegree target,
                                         const WeightSystem& W, const std::vector<int>& d) {
  return graded_piece_basis(G, target, Grading(G.ring()->vars, W, d));
}

template <class F>
std::size_t graded_piece_dim(const GroebnerBasis<F>& G, BiDegree target, const Grading& grading) {
  return graded_piece_basis(G, target, grading).size();
}

template <class F>
std::size_t graded_piece_dim(const GroebnerBasis<F>& G, BiDegree target, const WeightSystem& W,
                             const std::vector<int>& d) {
  return graded_piece_basis(G, target, W, d).size();
}

// ---------------------------------------------------------------------------
// Hilbert series

/// numerator(t) / prod_i (1 - t^{weights[i]}), numerator[k] the t^k coefficient.
struct HilbertSeries {
  std::vector<std::int64_t> numerator;
  std::vector<int> denominator_weights;

  /// Coefficient of t^k in the power-series expansion.
  std::int64_t coefficient(long k) const {
    if (k < 0) return 0;
    std::vector<std::int64_t> s(std::size_t(k) + 1, 0);
    for (std::size_t i = 0; i < numerator.size() && i <= std::size_t(k); ++i) s[i] = numerator[i];
    for (int w : denominator_weights)
      for (std::size_t i = std::size_t(w); i <= std::size_t(k); ++i) s[i] += s[i - w];
    return s[std::size_t(k)];
  }

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

namespace detail {

using IntPoly = std::vector<std::int64_t>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly add(IntPoly a, const IntPoly& b, std::int64_t sign = 1, std::size_t shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
  trim(a);
  return a;
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline IntPoly one_minus_t_pow(long d) {
  IntPoly r(std::size_t(d) + 1, 0);
  r[0] += 1;
  r[std::size_t(d)] -= 1;
  trim(r);
  return r;
}

using ExpVec = std::vector<int>;

inline bool divides(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline void minimize(std::vector<ExpVec>& gens) {
  std::sort(gens.begin(), gens.end(), [](const ExpVec& a, const ExpVec& b) {
    long sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    return sa != sb ? sa < sb : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExpVec> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  gens = std::move(out);
}

inline long weighted(const ExpVec& e, const std::vector<long>& w) {
  long s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
  return s;
}

/// Numerator of the Hilbert series of S/(gens) over prod (1 - t^{w_i}), by
/// pivoting on a variable power: N(I) = N(I + p) + t^{deg p} N(I : p).
inline IntPoly hilbert_numerator(std::vector<ExpVec> gens, const std::vector<long>& w) {
  minimize(gens);
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (weighted(g, w) == 0) return {}; // unit ideal

  // Pairwise coprime generators: product formula.
  const std::size_t n = w.size();
  std::vector<int> count(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] > 0) ++count[i];
  bool coprime = std::all_of(count.begin(), count.end(), [](int c) { return c <= 1; });
  if (coprime) {
    IntPoly r{1};
    for (const auto& g : gens) r = mul(r, one_minus_t_pow(weighted(g, w)));
    return r;
  }

  std::size_t var = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (count[i] > count[var]) var = i;
  // Median exponent of var among mixed generators; since count[var] > 1 and
  // the set is minimal, at least one mixed generator contains var.
  std::vector<int> es;
  for (const auto& g : gens) {
    if (g[var] == 0) continue;
    int support = 0;
    for (int x : g) support += x > 0;
    if (support > 1) es.push_back(g[var]);
  }
  std::sort(es.begin(), es.end());
  const int e = es[es.size() / 2];

  ExpVec pivot(n, 0);
  pivot[var] = e;

  std::vector<ExpVec> plus = gens;
  plus.push_back(pivot);

  std::vector<ExpVec> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    ExpVec q = g;
    q[var] = std::max(0, q[var] - e);
    colon.push_back(std::move(q));
  }

  IntPoly a = hilbert_numerator(std::move(plus), w);
  IntPoly b = hilbert_numerator(std::move(colon), w);
  return add(std::move(a), b, 1, std::size_t(weighted(pivot, w)));
}

} // namespace detail

/// Hilbert series of S_W / (monomials). Monomials may only involve geometric
/// variables of `vars`; W weights those variables in order.
inline HilbertSeries monomial_ideal_hilbert_series(const std::vector<Monomial>& monomials,
                                                   const VariableTable& vars,
                                                   const WeightSystem& W) {
  auto geo = vars.indices(VarRole::geometric);
  if (geo.size() != W.size()) throw DomainError("hilbert series: weights do not match variables");
  std::vector<long> w;
  for (std::size_t k = 0; k < geo.size(); ++k) w.push_back(W[k]);
  std::vector<detail::ExpVec> gens;
  for (const auto& m : monomials) {
    detail::ExpVec e(geo.size());
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (m[i] != 0 && vars.role(i) != VarRole::geometric)
        throw DomainError("hilbert series: monomial involves an auxiliary variable");
    for (std::size_t k = 0; k < geo.size(); ++k) e[k] = m[geo[k]];
    gens.push_back(std::move(e));
  }
  HilbertSeries hs;
  hs.numerator = detail::hilbert_numerator(std::move(gens), w);
  hs.denominator_weights = W.w;
  return hs;
}

template <class F>
HilbertSeries hilbert_series(const GroebnerBasis<F>& G, const WeightSystem& W) {
  return monomial_ideal_hilbert_series(G.lead_monomials(), G.ring()->vars, W);
}

/// Numerator prod_j (1 - t^{d_j}) of a weighted complete intersection.
inline std::vector<std::int64_t> complete_intersection_numerator(const std::vector<int>& degrees) {
  detail::IntPoly r{1};
  for (int d : degrees) r = detail::mul(r, detail::one_minus_t_pow(d));
  return r;
}

} // namespace wcit
