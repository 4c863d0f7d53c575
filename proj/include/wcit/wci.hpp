#pragma once

// Weighted complete intersections X = V(f_1, ..., f_c) in P(W): validation,
// regular-sequence and quasi-smoothness certificates, and the dimensions of
// H^0 and H^{n-c} of O_X(l).

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "groebner.hpp"
#include "poly.hpp"

namespace wcit {

template <class F>
class WeightedCI {
public:
  WeightedCI(RingPtr<F> ring, WeightSystem W, std::vector<int> d, std::vector<Polynomial<F>> f)
      : ring_(std::move(ring)), W_(std::move(W)), d_(std::move(d)), f_(std::move(f)) {}

  const RingPtr<F>& ring() const noexcept { return ring_; }
  const WeightSystem& weights() const noexcept { return W_; }
  const std::vector<int>& degrees() const noexcept { return d_; }
  const std::vector<Polynomial<F>>& equations() const noexcept { return f_; }
  const F& field() const noexcept { return ring_->field; }

  long n() const noexcept { return long(W_.size()) - 1; }
  long c() const noexcept { return long(d_.size()); }
  long dimension() const noexcept { return n() - c(); }
  long nu() const { return W_.sum() - std::accumulate(d_.begin(), d_.end(), 0L); }

  Grading grading() const { return Grading(ring_->vars, W_, {}); }

private:
  RingPtr<F> ring_;
  WeightSystem W_;
  std::vector<int> d_;
  std::vector<Polynomial<F>> f_;
};

/// Builds X after checking shapes and that each f_i is weighted homogeneous
/// of degree d_i.
template <class F>
WeightedCI<F> validate(const RingPtr<F>& ring, WeightSystem W, std::vector<int> d,
                       std::vector<Polynomial<F>> f) {
  const auto& vars = ring->vars;
  if (vars.indices(VarRole::auxiliary).size() != 0)
    throw DomainError("a weighted complete intersection lives in a ring of geometric variables");
  if (W.size() != vars.size())
    throw DomainError("expected " + std::to_string(vars.size()) + " weights, got " +
                      std::to_string(W.size()));
  if (W.size() == 0) throw DomainError("weighted projective space needs at least one variable");
  if (f.size() != d.size())
    throw DomainError(std::to_string(f.size()) + " equations but " + std::to_string(d.size()) +
                      " degrees");
  const long n = long(W.size()) - 1;
  if (long(d.size()) > n)
    throw DomainError("codimension c = " + std::to_string(d.size()) + " exceeds n = " +
                      std::to_string(n));
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (d[j] < 1) throw DomainError("equation degrees must be positive");
    if (!same_ring(f[j].ring(), ring))
      throw FieldMismatch("equation " + std::to_string(j + 1) + " is over a different ring");
    if (f[j].is_zero()) throw DomainError("equation " + std::to_string(j + 1) + " is zero");
    auto deg = is_weighted_homogeneous(f[j], W);
    if (!deg)
      throw DomainError("equation " + std::to_string(j + 1) + " is not weighted homogeneous");
    long got = std::get<long>(*deg);
    if (got != d[j])
      throw DomainError("equation " + std::to_string(j + 1) + " has weighted degree " +
                        std::to_string(got) + ", declared " + std::to_string(d[j]));
  }
  return WeightedCI<F>(ring, std::move(W), std::move(d), std::move(f));
}

/// Groebner basis and Hilbert series of A = S_W / (f_1, ..., f_c).
template <class F>
struct CoordinateRing {
  GroebnerBasis<F> basis;
  HilbertSeries series;

  std::int64_t dim(long degree) const { return series.coefficient(degree); }
};

template <class F>
CoordinateRing<F> coordinate_ring(const WeightedCI<F>& X) {
  auto gb = buchberger(X.equations(), X.ring());
  auto hs = hilbert_series(gb, X.weights());
  return {std::move(gb), std::move(hs)};
}

/// Regularity of the sequence f_1..f_c, read off from the exact Hilbert series.
template <class F>
bool certify_regular_sequence(const CoordinateRing<F>& A, const WeightedCI<F>& X) {
  return A.series.numerator == complete_intersection_numerator(X.degrees());
}

template <class F>
bool certify_regular_sequence(const WeightedCI<F>& X) {
  return certify_regular_sequence(coordinate_ring(X), X);
}

struct CertificationReport {
  bool is_complete_intersection = false;
  bool is_quasi_smooth = false;
  std::string details;
  std::vector<std::string> warnings;
};

/// gcd of every n of the n+1 weights must be 1.
inline bool weights_well_formed(const WeightSystem& W) {
  for (std::size_t skip = 0; skip < W.size(); ++skip) {
    int g = 0;
    for (std::size_t i = 0; i < W.size(); ++i)
      if (i != skip) g = std::gcd(g, W[i]);
    if (W.size() > 1 && g != 1) return false;
  }
  return true;
}

namespace detail {

/// Leibniz expansion; c is small.
template <class F>
Polynomial<F> determinant(const std::vector<std::vector<Polynomial<F>>>& m, const RingPtr<F>& ring) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial<F>::constant(ring, ring->field.one());
  if (n == 1) return m[0][0];
  Polynomial<F> acc(ring);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial<F>>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial<F>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != col) row.push_back(m[r][k]);
      sub.push_back(std::move(row));
    }
    auto term = m[0][col] * determinant(sub, ring);
    acc = (col % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

} // namespace detail

/// All c x c minors of the Jacobian (d f_i / d x_j).
template <class F>
std::vector<Polynomial<F>> jacobian_minors(const WeightedCI<F>& X) {
  const std::size_t c = X.equations().size(), nv = X.ring()->nvars();
  std::vector<std::vector<Polynomial<F>>> jac(c);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < nv; ++j) jac[i].push_back(partial_derivative(X.equations()[i], j));
  std::vector<std::vector<std::size_t>> cols;
  std::vector<std::size_t> cur;
  detail::subsets(nv, c, 0, cur, cols);
  std::vector<Polynomial<F>> minors;
  for (const auto& s : cols) {
    std::vector<std::vector<Polynomial<F>>> sub(c);
    for (std::size_t i = 0; i < c; ++i)
      for (auto j : s) sub[i].push_back(jac[i][j]);
    auto det = detail::determinant(sub, X.ring());
    if (!det.is_zero()) minors.push_back(std::move(det));
  }
  return minors;
}

/// Jacobian criterion on the affine cone: quasi-smooth iff the sequence is
/// regular and V(f, all c x c minors) is the origin alone.
template <class F>
CertificationReport certify_quasi_smooth(const WeightedCI<F>& X) {
  CertificationReport rep;
  std::ostringstream os;
  rep.is_complete_intersection = certify_regular_sequence(X);
  os << "regular sequence: " << (rep.is_complete_intersection ? "yes" : "no");

  auto gens = X.equations();
  for (auto& m : jacobian_minors(X)) gens.push_back(std::move(m));
  auto gb = buchberger(gens, X.ring());
  bool origin_only = cone_is_origin_only(gb);
  os << "; singular locus of the affine cone ";
  if (origin_only) {
    os << "is contained in {0}";
  } else {
    std::vector<bool> seen(X.ring()->nvars(), gb.is_unit());
    for (const auto& m : gb.lead_monomials())
      if (auto v = m.pure_power_variable()) seen[*v] = true;
    os << "is positive-dimensional (no pure power of";
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) os << ' ' << X.ring()->vars.name(i);
    os << " in the lead ideal)";
  }
  rep.is_quasi_smooth = origin_only && rep.is_complete_intersection;
  if (!weights_well_formed(X.weights()))
    rep.warnings.push_back("weights are not well-formed; ring-side dimensions are reported "
                           "without Hodge-theoretic meaning");
  rep.details = os.str();
  return rep;
}

struct CohomologyDims {
  std::int64_t h0 = 0;
  std::int64_t htop = 0;

  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// h^0(O_X(l)) = dim A_l and h^{n-c}(O_X(l)) = dim A_{-l-nu}; all other
/// cohomology of O_X(l) vanishes.
template <class F>
CohomologyDims structure_sheaf_cohomology_dims(const CoordinateRing<F>& A, const WeightedCI<F>& X,
                                               long l) {
  if (X.dimension() < 1) throw DomainError("cohomology of O_X(l) needs dim X >= 1");
  return {A.dim(l), A.dim(-l - X.nu())};
}

template <class F>
CohomologyDims structure_sheaf_cohomology_dims(const WeightedCI<F>& X, long l) {
  auto A = coordinate_ring(X);
  if (!certify_regular_sequence(A, X))
    throw DomainError("cohomology of O_X(l) needs a complete intersection");
  return structure_sheaf_cohomology_dims(A, X, l);
}

} // namespace wcit
