#pragma once

// Hyperelliptic Fano threefolds of Picard rank 1, index 1, degree 4:
// X = V(z^2 - f, g) in P(1,1,1,1,1,2), a double cover of the quadric V(g)
// branched along V(f, g), with g normalised to x0^2 + ... + x4^2.

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "error.hpp"
#include "groebner.hpp"
#include "jacobi.hpp"
#include "linalg.hpp"
#include "torelli.hpp"
#include "wci.hpp"

namespace wcit {

inline const std::vector<std::string>& fano_variable_names() {
  static const std::vector<std::string> names{"x0", "x1", "x2", "x3", "x4", "z"};
  return names;
}

template <class F>
RingPtr<F> fano_ring(const F& field) {
  return make_ring(field, VariableTable(fano_variable_names()));
}

template <class F>
struct HyperellipticFano {
  RingPtr<F> ring;             // x0..x4, z
  Polynomial<F> f;             // quartic in x0..x4 (after normalising g)
  Polynomial<F> g;             // x0^2 + ... + x4^2
  std::vector<Polynomial<F>> h; // h_i = (df/dx_i) / 2
  WeightedCI<F> variety;       // equations (g, z^2 - f), d = (2, 4)
  CertificationReport certification;
};

template <class F>
Polynomial<F> standard_quadric(const RingPtr<F>& ring) {
  Polynomial<F> g(ring);
  for (std::size_t i = 0; i < 5; ++i) {
    auto x = Polynomial<F>::variable(ring, i);
    g = g + x * x;
  }
  return g;
}

namespace detail {

/// Linear change of coordinates x = P x' with g(P x') = sum x'_i^2, if the
/// quadratic form of g diagonalises to squares over the field.
template <class F>
std::optional<Matrix<F>> normalising_transform(const Polynomial<F>& g) {
  using E = typename F::Element;
  const F& field = g.field();
  const std::size_t n = 5;
  Matrix<F> Q(field, n, n);
  const E half = field.from_int(2).inverse();
  for (const auto& t : g.terms()) {
    if (t.mono.degree() != 2) return std::nullopt;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < t.mono[i]; ++k) idx.push_back(i);
    if (idx.size() != 2) return std::nullopt;
    if (idx[0] == idx[1]) Q(idx[0], idx[0]) += t.coeff;
    else {
      Q(idx[0], idx[1]) += t.coeff * half;
      Q(idx[1], idx[0]) += t.coeff * half;
    }
  }
  // Symmetric elimination: maintain P with P^T Q0 P = Q.
  Matrix<F> P = Matrix<F>::identity(field, n);
  auto add_col = [&](Matrix<F>& M, std::size_t dst, std::size_t src, const E& c) {
    for (std::size_t r = 0; r < M.rows(); ++r) M(r, dst) += c * M(r, src);
  };
  auto add_row = [&](Matrix<F>& M, std::size_t dst, std::size_t src, const E& c) {
    for (std::size_t k = 0; k < M.cols(); ++k) M(dst, k) += c * M(src, k);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (Q(k, k).is_zero()) {
      std::optional<std::size_t> j;
      for (std::size_t i = k + 1; i < n && !j; ++i)
        if (!Q(i, k).is_zero()) j = i;
      if (!j) continue; // row k already zero off the diagonal
      // x_k <- x_k + x_j (or a multiple) makes the pivot nonzero.
      E c = field.one();
      if ((Q(*j, *j) + Q(k, *j) + Q(k, *j)).is_zero()) c = field.from_int(2);
      add_col(Q, k, *j, c);
      add_row(Q, k, *j, c);
      add_col(P, k, *j, c);
      if (Q(k, k).is_zero()) return std::nullopt;
    }
    E inv = Q(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (Q(i, k).is_zero()) continue;
      E c = -(Q(i, k) * inv);
      add_col(Q, i, k, c);
      add_row(Q, i, k, c);
      add_col(P, i, k, c);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (Q(i, i).is_zero()) return std::nullopt; // singular quadric
    auto s = field.sqrt(Q(i, i));
    if (!s) return std::nullopt;
    E inv = s->inverse();
    for (std::size_t r = 0; r < n; ++r) P(r, i) = P(r, i) * inv;
  }
  return P;
}

} // namespace detail

/// f must be a quartic in x0..x4. Without `g` the quadric is x0^2 + ... + x4^2;
/// otherwise g is brought to that form by a rational linear change of
/// coordinates (applied to f as well), or rejected if none exists.
template <class F>
HyperellipticFano<F> build_fano(const Polynomial<F>& f_in,
                                const std::optional<std::type_identity_t<Polynomial<F>>>& g_in = std::nullopt) {
  auto ring = fano_ring(f_in.field());
  auto f = embed(f_in, ring);
  const std::size_t z = 5;
  const WeightSystem W5({1, 1, 1, 1, 1, 2});
  for (const auto& t : f.terms())
    if (t.mono[z] != 0) throw DomainError("f must not involve z");
  auto deg = is_weighted_homogeneous(f, W5);
  if (!deg) throw DomainError("f is not homogeneous");
  if (auto* d = std::get_if<long>(&*deg); d && *d != 4)
    throw DomainError("f must have degree 4, got " + std::to_string(*d));

  auto g = standard_quadric(ring);
  if (g_in) {
    auto gg = embed(*g_in, ring);
    if (gg != g) {
      auto P = detail::normalising_transform(gg);
      if (!P) throw DomainError("cannot bring g to x0^2 + ... + x4^2 over " + f.field().name());
      std::vector<Polynomial<F>> images;
      for (std::size_t i = 0; i < 5; ++i) {
        Polynomial<F> xi(ring);
        for (std::size_t j = 0; j < 5; ++j)
          xi = xi + Polynomial<F>::variable(ring, j).scaled((*P)(i, j));
        images.push_back(std::move(xi));
      }
      images.push_back(Polynomial<F>::variable(ring, z));
      if (substitute(gg, images, ring) != g) throw Error("internal: quadric normalisation failed");
      f = substitute(f, images, ring);
    }
  }

  auto zp = Polynomial<F>::variable(ring, z);
  auto X = validate(ring, W5, {2, 4}, {g, zp * zp - f});
  auto cert = certify_quasi_smooth(X);
  if (!cert.is_quasi_smooth)
    throw DomainError("X = V(z^2 - f, g) is not quasi-smooth: " + cert.details);

  std::vector<Polynomial<F>> h;
  const auto half = f.field().from_int(2).inverse();
  for (std::size_t i = 0; i < 5; ++i) h.push_back(partial_derivative(f, i).scaled(half));
  return {ring, f, g, std::move(h), std::move(X), std::move(cert)};
}

/// f - z^2, g, y2 x_i - y4 h_i (i = 0..4), y4 z, in the Jacobi ring's variables.
template <class F>
std::vector<Polynomial<F>> displayed_relations(const HyperellipticFano<F>& X, const JacobiRing<F>& R) {
  auto y2 = Polynomial<F>::variable(R.ring(), R.variable("y2"));
  auto y4 = Polynomial<F>::variable(R.ring(), R.variable("y4"));
  auto z = Polynomial<F>::variable(R.ring(), R.variable("z"));
  std::vector<Polynomial<F>> rel;
  rel.push_back(R.lift(X.f) - z * z);
  rel.push_back(R.lift(X.g));
  for (std::size_t i = 0; i < 5; ++i) {
    auto xi = Polynomial<F>::variable(R.ring(), i);
    rel.push_back(y2 * xi - y4 * R.lift(X.h[i]));
  }
  rel.push_back(y4 * z);
  return rel;
}

/// Two-sided ideal equality between the Jacobi ideal and `relations`.
template <class F>
bool presentation_matches(const JacobiRing<F>& R, const std::vector<Polynomial<F>>& relations) {
  for (const auto& r : relations)
    if (!R.reduce(r).is_zero()) return false;
  auto other = buchberger(relations, R.ring());
  for (const auto& g : R.generators())
    if (!normal_form(g, other).is_zero()) return false;
  return true;
}

template <class F>
bool displayed_presentation_check(const HyperellipticFano<F>& X, const JacobiRing<F>& R) {
  return presentation_matches(R, displayed_relations(X, R));
}

/// Scalars of the deck involution z -> -z on the Jacobi ring's variables.
template <class F>
std::vector<typename F::Element> involution_scalars(const JacobiRing<F>& R) {
  std::vector<typename F::Element> s(R.ring()->nvars(), R.field().one());
  s[R.variable("z")] = -R.field().one();
  return s;
}

template <class F>
struct EigenSplit {
  BiDegree degree;
  std::size_t invariant = 0;
  std::size_t anti_invariant = 0;
  bool squares_to_identity = false;
  Matrix<F> invariant_basis; // columns in the component's monomial basis
  std::vector<Polynomial<F>> anti_invariant_elements;
};

template <class F>
EigenSplit<F> involution_split(const JacobiRing<F>& R, BiDegree bd) {
  auto M = R.diagonal_action(involution_scalars(R), bd);
  const auto n = M.rows();
  auto I = Matrix<F>::identity(R.field(), n);
  auto minus_I = Matrix<F>(R.field(), n, n) - I;
  auto inv = kernel(M - I);
  auto anti = kernel(M - minus_I);
  return {bd, inv.cols(), anti.cols(), M * M == I, inv, kernel_elements(R, bd, anti)};
}

template <class F>
struct InvolutionReport {
  std::vector<EigenSplit<F>> components; // R_{1,0}, R_{1,-1}, R_{2,-1}
};

template <class F>
InvolutionReport<F> involution_report(const JacobiRing<F>& R) {
  InvolutionReport<F> rep;
  for (BiDegree bd : {BiDegree{1, 0}, BiDegree{1, -1}, BiDegree{2, -1}})
    rep.components.push_back(involution_split(R, bd));
  return rep;
}

template <class F>
struct InvariantTorelliResult {
  std::size_t theta_dim = 0;
  std::size_t full_kernel_dim = 0;
  std::vector<Polynomial<F>> kernel_basis;
  std::size_t invariant_dim = 0;
  std::size_t invariant_rank = 0;
  bool invariant_restriction_injective = false;
  bool kernel_iota_stable = false;
  bool kernel_anti_invariant = false;
};

template <class F>
InvariantTorelliResult<F> invariant_torelli_check(const HyperellipticFano<F>& X, const JacobiRing<F>& R) {
  auto tm = torelli_matrix(X.variety, R);
  auto M = R.diagonal_action(involution_scalars(R), {1, 0});
  const auto n = M.rows();
  auto I = Matrix<F>::identity(R.field(), n);
  auto inv = kernel(M - I);
  auto K = kernel(tm.stacked);

  InvariantTorelliResult<F> res;
  res.theta_dim = n;
  res.full_kernel_dim = K.cols();
  res.kernel_basis = kernel_elements(R, {1, 0}, K);
  res.invariant_dim = inv.cols();
  res.invariant_rank = inv.cols() == 0 ? 0 : rank(tm.stacked * inv);
  res.invariant_restriction_injective = res.invariant_rank == res.invariant_dim;
  auto MK = M * K;
  res.kernel_iota_stable = rank(Matrix<F>::hconcat(K, MK)) == rank(K);
  // (M + I) K = 0 says every kernel vector has no invariant part.
  res.kernel_anti_invariant = (MK - (Matrix<F>(R.field(), n, K.cols()) - K)).is_zero();
  return res;
}

struct MacaulayCheck {
  bool injective = false;
  std::size_t dim_b4 = 0;
  std::size_t dim_b3 = 0;
  std::size_t dim_b7 = 0;
  std::size_t rank = 0;
};

/// Injectivity of B_4 -> Hom(B_3, B_7) for B = k[x0..x4]/(f, g), by exact rank.
template <class F>
MacaulayCheck b_ring_macaulay_check(const HyperellipticFano<F>& X) {
  auto ring = make_ring(X.f.field(), VariableTable({"x0", "x1", "x2", "x3", "x4"}));
  auto f = embed(X.f, ring);
  auto g = embed(X.g, ring);
  auto G = buchberger(std::vector<Polynomial<F>>{f, g}, ring);
  Grading grading(ring->vars, WeightSystem({1, 1, 1, 1, 1}), {});
  Component b3{{0, 3}, graded_piece_basis(G, {0, 3}, grading)};
  Component b4{{0, 4}, graded_piece_basis(G, {0, 4}, grading)};
  Component b7{{0, 7}, graded_piece_basis(G, {0, 7}, grading)};
  Matrix<F> stacked(ring->field, b3.dim() * b7.dim(), b4.dim());
  for (std::size_t k = 0; k < b4.dim(); ++k) {
    auto u = Polynomial<F>::term(ring, b4.basis[k], ring->field.one());
    auto m = multiplication_matrix(G, u, b3, b7);
    for (std::size_t r = 0; r < b7.dim(); ++r)
      for (std::size_t c = 0; c < b3.dim(); ++c) stacked(r * b3.dim() + c, k) = m(r, c);
  }
  MacaulayCheck res;
  res.dim_b3 = b3.dim();
  res.dim_b4 = b4.dim();
  res.dim_b7 = b7.dim();
  res.rank = rank(stacked);
  res.injective = res.rank == res.dim_b4;
  return res;
}

} // namespace wcit
