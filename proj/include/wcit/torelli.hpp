#pragma once

// Middle Hodge numbers of a quasi-smooth weighted complete intersection and the
// infinitesimal Torelli map alpha -> (m_alpha : R_{p-1,-nu} -> R_{p,-nu})_p on
// R_{1,0}, with its kernel computed exactly.

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "jacobi.hpp"
#include "linalg.hpp"
#include "wci.hpp"

namespace wcit {

/// h^{p,q} = dim H^q(X, Omega~^p).
struct HodgeEntry {
  long p = 0;
  long q = 0;
  std::optional<std::int64_t> value; // empty: not computed
  std::string provenance;
};

struct HodgeTable {
  long dimension = 0;
  long nu = 0;
  std::vector<HodgeEntry> entries; // every (p, q) with 0 <= p, q <= dimension

  const HodgeEntry& entry(long p, long q) const {
    for (const auto& e : entries)
      if (e.p == p && e.q == q) return e;
    throw DomainError("Hodge entry (" + std::to_string(p) + "," + std::to_string(q) + ") out of range");
  }
  std::optional<std::int64_t> h(long p, long q) const { return entry(p, q).value; }
};

template <class F>
HodgeTable hodge_table(const WeightedCI<F>& X, const JacobiRing<F>& R, const CoordinateRing<F>& A) {
  const long dim = X.dimension();
  if (dim < 2) throw DomainError("Hodge table needs dim X >= 2, got " + std::to_string(dim));
  const long nu = X.nu();
  HodgeTable t{dim, nu, {}};
  for (long p = 0; p <= dim; ++p)
    for (long q = 0; q <= dim; ++q) {
      HodgeEntry e{p, q, std::nullopt, "not computed"};
      if (0 < p && p < dim && 0 < q && q <= dim - p) {
        if (q < dim - p && q != p) {
          e.value = 0;
          e.provenance = "0 < q < n-c-p, q != p";
        } else if (q < dim - p) {
          e.value = 1;
          e.provenance = "0 < q = p < n-c-p";
        } else if (q != p) {
          e.value = std::int64_t(R.component({p, -nu}).dim());
          e.provenance = "dim R_" + BiDegree{p, -nu}.to_string();
        } else {
          e.value = 1 + std::int64_t(R.component({p, -nu}).dim());
          e.provenance = "1 + dim R_" + BiDegree{p, -nu}.to_string();
        }
      } else if ((p == 0 && q == dim) || (p == dim && q == 0)) {
        e.value = A.dim(-nu);
        e.provenance = "dim A_" + std::to_string(-nu);
      }
      t.entries.push_back(std::move(e));
    }
  return t;
}

template <class F>
HodgeTable hodge_table(const WeightedCI<F>& X) {
  if (X.dimension() < 2) throw DomainError("Hodge table needs dim X >= 2");
  return hodge_table(X, build_jacobi(X), coordinate_ring(X));
}

struct TorelliComponent {
  long p = 0;
  BiDegree source;
  BiDegree target;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  bool vacuous = false;
  std::size_t rank = 0;
};

/// The map R_{1,0} -> (+)_p Hom(R_{p-1,-nu}, R_{p,-nu}) as one matrix: column k
/// is the vectorised multiplication matrix of the k-th basis monomial of R_{1,0}.
template <class F>
struct TorelliMatrix {
  Matrix<F> stacked;
  std::vector<TorelliComponent> components;
  std::vector<std::string> warnings;
};

template <class F>
TorelliMatrix<F> torelli_matrix(const WeightedCI<F>& X, const JacobiRing<F>& R) {
  const long dim = X.dimension();
  if (dim <= 2)
    throw DomainError("infinitesimal Torelli needs dim X = n - c > 2, got " + std::to_string(dim));
  const long nu = X.nu();
  const auto& theta = R.component({1, 0});
  std::vector<TorelliComponent> comps;
  std::vector<std::string> warnings;
  std::vector<Matrix<F>> blocks;
  for (long p = 1; p < dim; ++p) {
    if (p == dim - p) {
      warnings.push_back("skipped middle index p = " + std::to_string(p) +
                         " (p = n-c-p is outside the theorem)");
      continue;
    }
    TorelliComponent tc;
    tc.p = p;
    tc.source = {p - 1, -nu};
    tc.target = {p, -nu};
    const auto& src = R.component(tc.source);
    const auto& tgt = R.component(tc.target);
    tc.source_dim = src.dim();
    tc.target_dim = tgt.dim();
    tc.vacuous = src.dim() == 0 || tgt.dim() == 0;
    if (!tc.vacuous) {
      Matrix<F> block(R.field(), src.dim() * tgt.dim(), theta.dim());
      for (std::size_t k = 0; k < theta.dim(); ++k) {
        auto alpha = Polynomial<F>::term(R.ring(), theta.basis[k], R.field().one());
        auto m = multiplication_matrix(R.ideal_basis(), alpha, src, tgt);
        for (std::size_t r = 0; r < tgt.dim(); ++r)
          for (std::size_t c = 0; c < src.dim(); ++c) block(r * src.dim() + c, k) = m(r, c);
      }
      tc.rank = rank(block);
      blocks.push_back(std::move(block));
    }
    comps.push_back(tc);
  }
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix<F> stacked(R.field(), rows, theta.dim());
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) stacked(off + r, c) = b(r, c);
    off += b.rows();
  }
  return {std::move(stacked), std::move(comps), std::move(warnings)};
}

template <class F>
struct TorelliReport {
  long dimension = 0;
  long nu = 0;
  std::size_t dim_H1_Theta = 0; // dim R_{1,0}
  std::vector<TorelliComponent> components;
  std::size_t stacked_rank = 0;
  std::vector<Polynomial<F>> kernel_basis; // classes in R_{1,0}
  bool injective = false;
  bool vacuous = false; // no component contributed
  std::vector<std::string> warnings;

  std::size_t kernel_dim() const noexcept { return kernel_basis.size(); }
};

/// Columns of a kernel matrix as elements of R_{bd}.
template <class F>
std::vector<Polynomial<F>> kernel_elements(const JacobiRing<F>& R, BiDegree bd, const Matrix<F>& K) {
  std::vector<Polynomial<F>> out;
  for (std::size_t k = 0; k < K.cols(); ++k) {
    std::vector<typename F::Element> v;
    for (std::size_t i = 0; i < K.rows(); ++i) v.push_back(K(i, k));
    out.push_back(R.element(bd, v).monic());
  }
  return out;
}

template <class F>
TorelliReport<F> torelli_map(const WeightedCI<F>& X, const JacobiRing<F>& R) {
  auto tm = torelli_matrix(X, R);
  TorelliReport<F> rep;
  rep.dimension = X.dimension();
  rep.nu = X.nu();
  rep.dim_H1_Theta = R.component({1, 0}).dim();
  rep.components = tm.components;
  rep.warnings = tm.warnings;
  rep.vacuous = std::all_of(tm.components.begin(), tm.components.end(),
                            [](const auto& c) { return c.vacuous; });
  if (rep.vacuous) rep.warnings.push_back("vacuous map: every component has a zero side");
  auto K = kernel(tm.stacked);
  rep.stacked_rank = rep.dim_H1_Theta - K.cols();
  rep.kernel_basis = kernel_elements(R, {1, 0}, K);
  rep.injective = !rep.vacuous && K.cols() == 0;
  return rep;
}

template <class F>
TorelliReport<F> torelli_map(const WeightedCI<F>& X) {
  if (X.dimension() <= 2) throw DomainError("infinitesimal Torelli needs dim X = n - c > 2");
  return torelli_map(X, build_jacobi(X));
}

} // namespace wcit
