#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "wcit/fano.hpp"
#include "wcit/wci.hpp"

namespace fixture {

inline std::vector<std::string> names(const std::string& stem, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

template <class F>
wcit::WeightedCI<F> hypersurface(const F& field, int nvars, const std::string& f, int degree,
                                 std::vector<int> W = {}) {
  if (W.empty()) W.assign(std::size_t(nvars), 1);
  auto ring = wcit::make_ring(field, wcit::VariableTable(names("x", nvars)));
  return wcit::validate(ring, wcit::WeightSystem(W), {degree}, {wcit::parse_polynomial(f, ring)});
}

// x0^4 + ... + x4^4 in P^4
template <class F>
wcit::WeightedCI<F> fermat_quartic(const F& field) {
  return hypersurface(field, 5, "x0^4 + x1^4 + x2^4 + x3^4 + x4^4", 4);
}

// x4 missing: singular along the x4 axis of the cone
template <class F>
wcit::WeightedCI<F> quartic_cone(const F& field) {
  return hypersurface(field, 5, "x0^4 + x1^4 + x2^4 + x3^4", 4);
}

template <class F>
wcit::HyperellipticFano<F> fermat_fano(const F& field) {
  auto ring = wcit::fano_ring(field);
  return wcit::build_fano(wcit::parse_polynomial("x0^4 + x1^4 + x2^4 + x3^4 + x4^4", ring));
}

// Hand-written partials of y*(x0^4+...+x4^4), variables x0..x4, y.
template <class K>
std::vector<oracle::SparsePoly<K>> fermat_quartic_partials() {
  std::vector<oracle::SparsePoly<K>> gens;
  for (int i = 0; i < 5; ++i) {
    oracle::Exps e(6, 0);
    e[std::size_t(i)] = 3;
    e[5] = 1;
    gens.push_back({{e, K(4)}});
  }
  oracle::SparsePoly<K> f;
  for (int i = 0; i < 5; ++i) {
    oracle::Exps e(6, 0);
    e[std::size_t(i)] = 4;
    f[e] = K(1);
  }
  gens.push_back(f);
  return gens;
}

inline oracle::Grades fermat_quartic_grades() {
  return {{{0, 0, 0, 0, 0, 1}, {1, 1, 1, 1, 1, -4}}, {5, 1}};
}

// Partials of y2*(sum x_i^2) + y4*(z^2 - sum x_i^4), variables x0..x4, z, y2, y4.
template <class K>
std::vector<oracle::SparsePoly<K>> fermat_fano_partials() {
  auto ex = [](std::vector<std::pair<int, int>> powers) {
    oracle::Exps e(8, 0);
    for (auto [v, p] : powers) e[std::size_t(v)] += p;
    return e;
  };
  std::vector<oracle::SparsePoly<K>> gens;
  for (int i = 0; i < 5; ++i) gens.push_back({{ex({{6, 1}, {i, 1}}), K(2)}, {ex({{7, 1}, {i, 3}}), K(-4)}});
  gens.push_back({{ex({{7, 1}, {5, 1}}), K(2)}});
  oracle::SparsePoly<K> g, h;
  for (int i = 0; i < 5; ++i) {
    g[ex({{i, 2}})] = K(1);
    h[ex({{i, 4}})] = K(-1);
  }
  h[ex({{5, 2}})] = K(1);
  gens.push_back(g);
  gens.push_back(h);
  return gens;
}

inline oracle::Grades fermat_fano_grades() {
  return {{{0, 0, 0, 0, 0, 0, 1, 1}, {1, 1, 1, 1, 1, 2, -2, -4}}, {5, 1}};
}

using BigPrime = oracle::Mod<2147483647u>;

} // namespace fixture
