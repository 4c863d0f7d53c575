#pragma once

// Sparse multivariate polynomials over an exact field, with the weighted and
// bigraded degree bookkeeping used for weighted complete intersections and
// their Jacobi rings.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace wcit {

// ---------------------------------------------------------------------------
// Variables

/// Geometric variables are the coordinates x_i of P(W); auxiliary ones are the
/// y_j attached to the equations in the Jacobi ring.
enum class VarRole { geometric, auxiliary };

class VariableTable {
public:
  VariableTable() = default;

  /// All variables geometric.
  explicit VariableTable(std::vector<std::string> names)
      : VariableTable(names, std::vector<VarRole>(names.size(), VarRole::geometric)) {}

  VariableTable(std::vector<std::string> names, std::vector<VarRole> roles)
      : names_(std::move(names)), roles_(std::move(roles)) {
    if (names_.size() != roles_.size())
      throw DomainError("variable table: names and roles differ in length");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!valid_identifier(names_[i]))
        throw DomainError("variable table: invalid identifier '" + names_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j])
          throw DomainError("variable table: duplicate name '" + names_[i] + "'");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  VarRole role(std::size_t i) const { return roles_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  std::vector<std::size_t> indices(VarRole r) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < roles_.size(); ++i)
      if (roles_[i] == r) out.push_back(i);
    return out;
  }

  static bool valid_identifier(std::string_view s) {
    if (s.empty() || !is_alpha(s[0])) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return is_alpha(c) || is_digit(c) || c == '_'; });
  }

  friend bool operator==(const VariableTable&, const VariableTable&) = default;

private:
  static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  std::vector<std::string> names_;
  std::vector<VarRole> roles_;
};

// ---------------------------------------------------------------------------
// Monomials

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
      if (e < 0) throw DomainError("monomial exponents must be non-negative");
      degree_ += e;
    }
  }

  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1) {
    Monomial m(nvars);
    m.exps_.at(i) = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  /// Unweighted total degree.
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// Single variable index if this is x_i^k with k >= 1.
  std::optional<std::size_t> pure_power_variable() const {
    std::optional<std::size_t> v;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (v) return std::nullopt;
      v = i;
    }
    return v;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Graded reverse lexicographic order on raw exponents, x0 > x1 > ... .
/// Returns <0, 0, >0 like strcmp.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

// ---------------------------------------------------------------------------
// Gradings

struct WeightSystem {
  std::vector<int> w;

  WeightSystem() = default;
  explicit WeightSystem(std::vector<int> weights) : w(std::move(weights)) {
    for (int x : w)
      if (x < 1) throw DomainError("weights must be positive integers");
  }
  std::size_t size() const noexcept { return w.size(); }
  int operator[](std::size_t i) const { return w[i]; }
  long sum() const { return std::accumulate(w.begin(), w.end(), 0L); }
};

/// (deg1, deg2): deg1 counts auxiliary variables, deg2 is the weighted degree
/// with deg(x_i) = W_i and deg(y_j) = -d_j.
struct BiDegree {
  long d1 = 0;
  long d2 = 0;

  friend BiDegree operator+(BiDegree a, BiDegree b) { return {a.d1 + b.d1, a.d2 + b.d2}; }
  friend BiDegree operator-(BiDegree a, BiDegree b) { return {a.d1 - b.d1, a.d2 - b.d2}; }
  friend auto operator<=>(const BiDegree&, const BiDegree&) = default;

  std::string to_string() const {
    return "(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
  }
};

/// Per-variable bidegrees: geometric x_i -> (0, W_i), auxiliary y_j -> (1, -d_j).
class Grading {
public:
  Grading() = default;

  Grading(const VariableTable& vars, const WeightSystem& W, const std::vector<int>& d) {
    auto geo = vars.indices(VarRole::geometric);
    auto aux = vars.indices(VarRole::auxiliary);
    if (geo.size() != W.size())
      throw DomainError("grading: " + std::to_string(W.size()) + " weights for " +
                        std::to_string(geo.size()) + " geometric variables");
    if (aux.size() != d.size())
      throw DomainError("grading: " + std::to_string(d.size()) + " degrees for " +
                        std::to_string(aux.size()) + " auxiliary variables");
    per_var_.resize(vars.size());
    for (std::size_t k = 0; k < geo.size(); ++k) per_var_[geo[k]] = {0, W[k]};
    for (std::size_t k = 0; k < aux.size(); ++k) per_var_[aux[k]] = {1, -d[k]};
    geometric_ = std::move(geo);
    auxiliary_ = std::move(aux);
    weights_ = W;
    degrees_ = d;
  }

  BiDegree of(const Monomial& m) const {
    BiDegree b;
    for (std::size_t i = 0; i < per_var_.size(); ++i) {
      b.d1 += per_var_[i].d1 * m[i];
      b.d2 += per_var_[i].d2 * m[i];
    }
    return b;
  }

  /// Sum of W_i * mu_i over the geometric variables.
  long geometric_weight(const Monomial& m) const {
    long s = 0;
    for (std::size_t i = 0; i < per_var_.size(); ++i)
      if (per_var_[i].d1 == 0) s += per_var_[i].d2 * m[i];
    return s;
  }

  std::size_t size() const noexcept { return per_var_.size(); }
  const BiDegree& variable(std::size_t i) const { return per_var_.at(i); }
  const std::vector<std::size_t>& geometric() const noexcept { return geometric_; }
  const std::vector<std::size_t>& auxiliary() const noexcept { return auxiliary_; }
  const WeightSystem& weights() const noexcept { return weights_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }

  /// Positive weight G = deg2 + K*deg1 with K = max d_j + 1. Every variable
  /// gets G >= 1, and bihomogeneous polynomials are G-homogeneous.
  long positive_shift() const {
    int k = 0;
    for (int x : degrees_) k = std::max(k, x);
    return k + 1;
  }
  long positive_weight(const Monomial& m) const {
    BiDegree b = of(m);
    return b.d2 + positive_shift() * b.d1;
  }

private:
  std::vector<BiDegree> per_var_;
  std::vector<std::size_t> geometric_;
  std::vector<std::size_t> auxiliary_;
  WeightSystem weights_;
  std::vector<int> degrees_;
};

inline BiDegree bidegree_of(const Monomial& m, const VariableTable& vars, const WeightSystem& W,
                            const std::vector<int>& d) {
  return Grading(vars, W, d).of(m);
}

// ---------------------------------------------------------------------------
// Rings and polynomials

template <class F>
struct PolyRing {
  F field;
  VariableTable vars;

  std::size_t nvars() const noexcept { return vars.size(); }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field == b.field && a.vars == b.vars;
  }
};

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <class F>
RingPtr<F> make_ring(F field, VariableTable vars) {
  return std::make_shared<const PolyRing<F>>(PolyRing<F>{std::move(field), std::move(vars)});
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

inline bool is_negative(const Rational& r) { return r.sign() < 0; }
inline bool is_negative(const Fp&) { return false; }

template <class F>
class Polynomial {
public:
  using Element = typename F::Element;
  struct Term {
    Monomial mono;
    Element coeff;
  };

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, const Element& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
    return p;
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t i) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->nvars(), i), ring->field.one()});
    return p;
  }
  static Polynomial term(RingPtr<F> ring, Monomial m, const Element& c) {
    Polynomial p(ring);
    if (m.size() != ring->nvars()) throw FieldMismatch("monomial length differs from ring");
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
  }
  /// Combines like terms and drops zeros; any input order.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms) {
    std::map<Monomial, Element, GrevlexGreater> acc;
    for (auto& t : terms) {
      if (t.mono.size() != ring->nvars()) throw FieldMismatch("monomial length differs from ring");
      auto it = acc.find(t.mono);
      if (it == acc.end()) acc.emplace(std::move(t.mono), std::move(t.coeff));
      else it->second += t.coeff;
    }
    Polynomial p(ring);
    for (auto& [m, c] : acc)
      if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  /// Trusted: terms already sorted descending, distinct, nonzero.
  static Polynomial from_sorted(RingPtr<F> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr<F>& ring() const noexcept { return ring_; }
  const F& field() const noexcept { return ring_->field; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Element& lead_coeff() const { return terms_.front().coeff; }

  /// Coefficient of m, zero if absent.
  Element coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return field().zero();
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Element inv = lead_coeff().inverse();
    return scaled(inv);
  }

  Polynomial scaled(const Element& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
  }

  /// c * m * this
  Polynomial times_term(const Monomial& m, const Element& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, true);
  }
  Polynomial operator-() const { return scaled(-field().one()); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_ring(a, b);
    std::map<Monomial, Element, GrevlexGreater> acc;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        Monomial m = s.mono * t.mono;
        auto it = acc.find(m);
        if (it == acc.end()) acc.emplace(std::move(m), s.coeff * t.coeff);
        else it->second += s.coeff * t.coeff;
      }
    Polynomial r(a.ring_);
    for (auto& [m, c] : acc)
      if (!c.is_zero()) r.terms_.push_back({m, c});
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, field().one());
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Canonical text in the input grammar, terms in descending grevlex order.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      bool neg = is_negative(t.coeff);
      Element mag = neg ? -t.coeff : t.coeff;
      if (first) os << (neg ? "-" : "");
      else os << (neg ? " - " : " + ");
      first = false;
      bool need_star = false;
      if (!mag.is_one() || t.mono.is_one()) {
        os << mag.to_string();
        need_star = true;
      }
      for (std::size_t i = 0; i < t.mono.size(); ++i) {
        if (t.mono[i] == 0) continue;
        if (need_star) os << '*';
        os << ring_->vars.name(i);
        if (t.mono[i] > 1) os << '^' << t.mono[i];
        need_star = true;
      }
    }
    return os.str();
  }

private:
  static void check_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw FieldMismatch("polynomials from different rings");
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_ring(a, b);
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp;
      if (i == a.terms_.size()) cmp = -1;
      else if (j == b.terms_.size()) cmp = 1;
      else cmp = grevlex_compare(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        Element c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff
                             : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Calculus and degrees

template <class F>
Polynomial<F> partial_derivative(const Polynomial<F>& p, std::size_t var) {
  if (var >= p.ring()->nvars()) throw DomainError("derivative: variable index out of range");
  std::vector<typename Polynomial<F>::Term> out;
  for (const auto& t : p.terms()) {
    int e = t.mono[var];
    if (e == 0) continue;
    auto c = t.coeff * p.field().from_int(e);
    if (c.is_zero()) continue;
    auto ex = t.mono.exponents();
    ex[var] -= 1;
    out.push_back({Monomial(std::move(ex)), std::move(c)});
  }
  // dividing by x_var preserves the monomial order
  return Polynomial<F>::from_sorted(p.ring(), std::move(out));
}

struct AnyDegree {
  friend bool operator==(const AnyDegree&, const AnyDegree&) = default;
};
using HomogeneousDegree = std::variant<long, AnyDegree>;

/// Weighted degree if every term of p has the same one; AnyDegree for 0.
/// `W` weights the geometric variables of p's table, in order.
template <class F>
std::optional<HomogeneousDegree> is_weighted_homogeneous(const Polynomial<F>& p,
                                                         const WeightSystem& W) {
  const auto& vars = p.ring()->vars;
  auto geo = vars.indices(VarRole::geometric);
  if (geo.size() != W.size())
    throw DomainError("weight system does not match the geometric variables");
  if (p.is_zero()) return HomogeneousDegree{AnyDegree{}};
  std::optional<long> deg;
  for (const auto& t : p.terms()) {
    long s = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (vars.role(i) != VarRole::geometric)
        throw DomainError("weighted homogeneity is defined for geometric variables only");
    }
    for (std::size_t k = 0; k < geo.size(); ++k) s += long(W[k]) * t.mono[geo[k]];
    if (deg && *deg != s) return std::nullopt;
    deg = s;
  }
  return HomogeneousDegree{*deg};
}

/// Common bidegree of all terms, or nullopt. Zero polynomial -> nullopt.
template <class F>
std::optional<BiDegree> bihomogeneous_degree(const Polynomial<F>& p, const Grading& g) {
  if (p.is_zero()) return std::nullopt;
  BiDegree b = g.of(p.lead_monomial());
  for (const auto& t : p.terms())
    if (g.of(t.mono) != b) return std::nullopt;
  return b;
}

/// Replaces each variable x_i by images[i] (polynomials over `target`).
template <class F>
Polynomial<F> substitute(const Polynomial<F>& p, const std::vector<Polynomial<F>>& images,
                         const RingPtr<F>& target) {
  if (images.size() != p.ring()->nvars())
    throw DomainError("substitute: need one image per variable");
  Polynomial<F> acc(target);
  for (const auto& t : p.terms()) {
    Polynomial<F> term = Polynomial<F>::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      for (int k = 0; k < t.mono[i]; ++k) term = term * images[i];
    acc = acc + term;
  }
  return acc;
}

/// Moves p into `target`, matching variables by name. Variables of p that
/// occur with nonzero exponent must exist in the target table.
template <class F>
Polynomial<F> embed(const Polynomial<F>& p, const RingPtr<F>& target) {
  const auto& src = p.ring()->vars;
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->vars.index_of(src.name(i));
  std::vector<typename Polynomial<F>::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<int> ex(target->nvars(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) throw FieldMismatch("embed: variable '" + src.name(i) + "' missing in target");
      ex[*map[i]] = t.mono[i];
    }
    out.push_back({Monomial(std::move(ex)), t.coeff});
  }
  return Polynomial<F>::from_terms(target, std::move(out));
}

/// x_i -> scalars[i] * x_i.
template <class F>
Polynomial<F> scale_variables(const Polynomial<F>& p,
                              const std::vector<typename F::Element>& scalars) {
  if (scalars.size() != p.ring()->nvars())
    throw DomainError("scale_variables: need one scalar per variable");
  std::vector<typename Polynomial<F>::Term> out;
  for (const auto& t : p.terms()) {
    auto c = t.coeff;
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      for (int k = 0; k < t.mono[i]; ++k) c = c * scalars[i];
    if (!c.is_zero()) out.push_back({t.mono, c});
  }
  return Polynomial<F>::from_sorted(p.ring(), std::move(out));
}

// ---------------------------------------------------------------------------
// Parsing
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := ident ('^' uint)?
//   coeff  := int ('/' uint)?
//
// Whitespace between tokens is ignored.

namespace detail {

template <class F>
class PolyParser {
public:
  PolyParser(std::string_view text, RingPtr<F> ring) : s_(text), ring_(std::move(ring)) {}

  Polynomial<F> parse() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty input", 1);
    std::vector<typename Polynomial<F>::Term> terms;
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    for (;;) {
      auto t = parse_term();
      if (neg) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos_ == s_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected character '") + c + "'", pos_ + 1);
      neg = c == '-';
      ++pos_;
    }
    return Polynomial<F>::from_terms(ring_, std::move(terms));
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r'))
      ++pos_;
  }
  static bool digit(char c) { return c >= '0' && c <= '9'; }
  static bool alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  typename Polynomial<F>::Term parse_term() {
    skip_ws();
    const F& field = ring_->field;
    auto coeff = field.one();
    std::vector<int> ex(ring_->nvars(), 0);
    if (pos_ == s_.size()) throw ParseError("expected a term", pos_ + 1);
    if (digit(peek())) {
      std::size_t start = pos_;
      std::string num = read_digits();
      std::string den = "1";
      if (peek() == '.') throw ParseError("non-integer coefficient", pos_ + 1);
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!digit(peek())) throw ParseError("malformed denominator", pos_ + 1);
        den = read_digits();
      }
      try {
        coeff = field.from_fraction(num, den);
      } catch (const DivisionByZero&) {
        throw ParseError("zero denominator", start + 1);
      }
      skip_ws();
      if (peek() != '*') return {Monomial(std::move(ex)), coeff};
      ++pos_;
    }
    for (;;) {
      parse_factor(ex);
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return {Monomial(std::move(ex)), coeff};
  }

  void parse_factor(std::vector<int>& ex) {
    skip_ws();
    std::size_t start = pos_;
    if (!alpha(peek())) {
      if (pos_ == s_.size()) throw ParseError("expected a variable", pos_ + 1);
      throw ParseError(std::string("expected a variable, found '") + peek() + "'", pos_ + 1);
    }
    while (pos_ < s_.size() && (alpha(s_[pos_]) || digit(s_[pos_]) || s_[pos_] == '_')) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    auto idx = ring_->vars.index_of(name);
    if (!idx) throw ParseError("unknown identifier '" + name + "'", start + 1);
    long e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (peek() == '-') throw ParseError("negative exponent", pos_ + 1);
      if (!digit(peek())) throw ParseError("malformed exponent", pos_ + 1);
      std::size_t estart = pos_;
      std::string digits = read_digits();
      if (peek() == '.') throw ParseError("non-integer exponent", pos_ + 1);
      if (digits.size() > 6) throw ParseError("exponent too large", estart + 1);
      e = std::stol(digits);
    }
    ex[*idx] += static_cast<int>(e);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  RingPtr<F> ring_;
};

} // namespace detail

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return detail::PolyParser<F>(text, ring).parse();
}

} // namespace wcit
