#pragma once

// The bigraded Jacobi ring R = k[x, y] / (dF/dx_0, ..., dF/dx_n, dF/dy_1, ..., dF/dy_c)
// of F = y_1 f_1 + ... + y_c f_c, with deg(x_i) = (0, W_i) and deg(y_j) = (1, -d_j).

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "groebner.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "wci.hpp"

namespace wcit {

/// Standard-monomial basis of one graded piece.
struct Component {
  BiDegree degree;
  std::vector<Monomial> basis;

  std::size_t dim() const noexcept { return basis.size(); }

  std::optional<std::size_t> index_of(const Monomial& m) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), m, GrevlexGreater{});
    if (it != basis.end() && *it == m) return std::size_t(it - basis.begin());
    return std::nullopt;
  }
};

template <class F>
struct ComponentMap {
  BiDegree source;
  BiDegree target;
  Matrix<F> matrix; // target.dim x source.dim
  Polynomial<F> multiplier;
};

/// Matrix of p -> NF(u p) from span(source) to span(target); both are
/// standard-monomial bases of the quotient by G.
template <class F>
Matrix<F> multiplication_matrix(const GroebnerBasis<F>& G, const Polynomial<F>& u,
                                const Component& source, const Component& target) {
  const F& field = G.ring()->field;
  Matrix<F> m(field, target.dim(), source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) {
    auto prod = normal_form(u.times_term(source.basis[j], field.one()), G);
    for (const auto& t : prod.terms()) {
      auto i = target.index_of(t.mono);
      if (!i)
        throw Error("normal form left the target component " + target.degree.to_string() +
                    "; is the Groebner basis truncated below this degree?");
      m(*i, j) = t.coeff;
    }
  }
  return m;
}

struct JacobiOptions {
  /// Truncate Buchberger for pieces with deg1 <= max_d1 and deg2 <= max_d2.
  std::optional<long> max_d2;
  long max_d1 = 2;
};

template <class F>
class JacobiRing {
public:
  /// F = sum y_j f_j in the ring (x_0..x_n, y_1..y_c); Groebner basis of its partials.
  static JacobiRing build(const WeightedCI<F>& X, const JacobiOptions& opts = {}) {
    if (X.c() == 0) throw DomainError("Jacobi ring needs at least one equation");
    JacobiRing R(X);
    const auto& geo_vars = X.ring()->vars;
    std::vector<std::string> names = geo_vars.names();
    std::vector<VarRole> roles(names.size(), VarRole::geometric);
    for (const auto& y : auxiliary_names(X.degrees(), names)) {
      names.push_back(y);
      roles.push_back(VarRole::auxiliary);
    }
    R.ring_ = make_ring(X.field(), VariableTable(names, roles));
    R.grading_ = Grading(R.ring_->vars, X.weights(), X.degrees());

    const auto aux = R.ring_->vars.indices(VarRole::auxiliary);
    Polynomial<F> pot(R.ring_);
    for (std::size_t j = 0; j < aux.size(); ++j)
      pot = pot + Polynomial<F>::variable(R.ring_, aux[j]) * embed(X.equations()[j], R.ring_);
    R.potential_ = pot;

    for (std::size_t i = 0; i < R.ring_->nvars(); ++i)
      R.generators_.push_back(partial_derivative(pot, i));

    BuchbergerOptions bo;
    bo.grading = &R.grading_;
    if (opts.max_d2) {
      bo.truncation = TruncationBound::for_bidegrees(R.grading_, opts.max_d1, *opts.max_d2);
      R.bound_ = BiDegree{opts.max_d1, *opts.max_d2};
    }
    R.basis_ = std::make_shared<const GroebnerBasis<F>>(buchberger(R.generators_, R.ring_, bo));
    return R;
  }

  /// y{d_j} when the degrees are distinct, y{j} (1-based) otherwise; a name
  /// clashing with a geometric variable gets trailing underscores.
  static std::vector<std::string> auxiliary_names(const std::vector<int>& d,
                                                  const std::vector<std::string>& taken) {
    std::set<int> distinct(d.begin(), d.end());
    bool by_degree = distinct.size() == d.size();
    std::vector<std::string> out;
    for (std::size_t j = 0; j < d.size(); ++j) {
      std::string name = "y" + std::to_string(by_degree ? d[j] : int(j + 1));
      auto clash = [&](const std::string& s) {
        return std::find(taken.begin(), taken.end(), s) != taken.end() ||
               std::find(out.begin(), out.end(), s) != out.end();
      };
      while (clash(name)) name += '_';
      out.push_back(name);
    }
    return out;
  }

  const WeightedCI<F>& source() const noexcept { return *source_; }
  const RingPtr<F>& ring() const noexcept { return ring_; }
  const F& field() const noexcept { return ring_->field; }
  const Grading& grading() const noexcept { return grading_; }
  const Polynomial<F>& potential() const noexcept { return potential_; }
  /// dF/dx_0, ..., dF/dx_n, dF/dy_1, ..., dF/dy_c in table order.
  const std::vector<Polynomial<F>>& generators() const noexcept { return generators_; }
  const GroebnerBasis<F>& ideal_basis() const noexcept { return *basis_; }

  std::size_t variable(std::string_view name) const {
    auto i = ring_->vars.index_of(name);
    if (!i) throw DomainError("no variable named '" + std::string(name) + "'");
    return *i;
  }

  /// Lifts a polynomial over the geometric ring (or any ring whose variable
  /// names are a subset of this one) into R's polynomial ring.
  Polynomial<F> lift(const Polynomial<F>& p) const { return embed(p, ring_); }

  Polynomial<F> parse(std::string_view text) const { return parse_polynomial(text, ring_); }

  Polynomial<F> reduce(const Polynomial<F>& p) const { return normal_form(p, *basis_); }

  /// Cached standard-monomial basis of R_{bd}.
  const Component& component(BiDegree bd) const {
    if (bd.d1 < 0) throw DomainError("component " + bd.to_string() + ": first degree must be >= 0");
    if (bound_ && (bd.d1 > bound_->d1 || bd.d2 > bound_->d2))
      throw DomainError("component " + bd.to_string() + " lies beyond the truncation bound " +
                        bound_->to_string());
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->components.find(bd);
    if (it == cache_->components.end()) {
      auto comp = std::make_unique<Component>(Component{bd, graded_piece_basis(*basis_, bd, grading_)});
      it = cache_->components.emplace(bd, std::move(comp)).first;
    }
    return *it->second;
  }

  /// m_u : R_src -> R_{src + deg u}. u must be bihomogeneous (and nonzero).
  ComponentMap<F> multiplication_matrix(const Polynomial<F>& u, BiDegree src) const {
    check_ring(u);
    auto bd = bihomogeneous_degree(u, grading_);
    if (!bd) throw DomainError("multiplier is zero or not bihomogeneous");
    return multiplication_matrix(u, *bd, src);
  }

  /// As above with the multiplier's bidegree given, so that u may be zero.
  ComponentMap<F> multiplication_matrix(const Polynomial<F>& u, BiDegree deg_u, BiDegree src) const {
    check_ring(u);
    if (!u.is_zero()) {
      auto bd = bihomogeneous_degree(u, grading_);
      if (!bd || *bd != deg_u) throw DomainError("multiplier is not bihomogeneous of bidegree " + deg_u.to_string());
    }
    const auto& s = component(src);
    const auto& t = component(src + deg_u);
    return {src, src + deg_u, wcit::multiplication_matrix(*basis_, u, s, t), reduce(u)};
  }

  /// True iff x_i -> scalars[i] x_i maps the ideal into itself.
  bool preserves_ideal(const std::vector<typename F::Element>& scalars) const {
    for (const auto& g : basis_->generators())
      if (!reduce(scale_variables(g, scalars)).is_zero()) return false;
    return true;
  }

  /// Matrix of the induced action of x_i -> scalars[i] x_i on R_{bd}.
  Matrix<F> diagonal_action(const std::vector<typename F::Element>& scalars, BiDegree bd) const {
    if (scalars.size() != ring_->nvars())
      throw DomainError("diagonal action needs one scalar per variable");
    if (!preserves_ideal(scalars)) throw DomainError("substitution does not preserve the Jacobi ideal");
    const auto& comp = component(bd);
    Matrix<F> m(field(), comp.dim(), comp.dim());
    for (std::size_t j = 0; j < comp.dim(); ++j) {
      auto img = reduce(scale_variables(Polynomial<F>::term(ring_, comp.basis[j], field().one()), scalars));
      for (const auto& t : img.terms()) m(*comp.index_of(t.mono), j) = t.coeff;
    }
    return m;
  }

  /// sum_k coords[k] * basis_k of R_{bd}.
  Polynomial<F> element(BiDegree bd, const std::vector<typename F::Element>& coords) const {
    const auto& comp = component(bd);
    if (coords.size() != comp.dim()) throw DomainError("coordinate vector has wrong length");
    std::vector<typename Polynomial<F>::Term> terms;
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (!coords[k].is_zero()) terms.push_back({comp.basis[k], coords[k]});
    return Polynomial<F>::from_terms(ring_, std::move(terms));
  }

private:
  explicit JacobiRing(const WeightedCI<F>& X)
      : source_(std::make_shared<const WeightedCI<F>>(X)), potential_(X.ring()),
        cache_(std::make_shared<Cache>()) {}

  void check_ring(const Polynomial<F>& u) const {
    if (!same_ring(u.ring(), ring_)) throw FieldMismatch("element is not from this Jacobi ring");
  }

  struct Cache {
    std::mutex mutex;
    std::map<BiDegree, std::unique_ptr<Component>> components;
  };

  std::shared_ptr<const WeightedCI<F>> source_;
  RingPtr<F> ring_;
  Grading grading_;
  Polynomial<F> potential_;
  std::vector<Polynomial<F>> generators_;
  std::shared_ptr<const GroebnerBasis<F>> basis_;
  std::optional<BiDegree> bound_;
  std::shared_ptr<Cache> cache_;
};

template <class F>
JacobiRing<F> build_jacobi(const WeightedCI<F>& X, const JacobiOptions& opts = {}) {
  return JacobiRing<F>::build(X, opts);
}

} // namespace wcit
