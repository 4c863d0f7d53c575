#pragma once

// Reference computations that share no code with the library: power-series
// expansion of Hilbert series, and dimensions of quotient components from a
// Macaulay matrix (all monomial multiples of the generators landing in one
// bidegree) with its own elimination.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Series = std::vector<std::int64_t>; // coefficients of t^0, t^1, ...

inline Series mul(const Series& a, const Series& b, std::size_t len) {
  Series out(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// prod (1 - t^d) / prod (1 - t^w), truncated after t^(len-1).
inline Series ci_series(const std::vector<int>& d, const std::vector<int>& w, std::size_t len) {
  Series s(len, 0);
  s[0] = 1;
  for (int dj : d) {
    Series f(std::size_t(dj) + 1, 0);
    f[0] = 1;
    f[std::size_t(dj)] = -1;
    s = mul(s, f, len);
  }
  for (int wi : w) {
    // divide by 1 - t^w: running sum with stride w
    for (std::size_t k = std::size_t(wi); k < len; ++k) s[k] += s[k - std::size_t(wi)];
  }
  return s;
}

/// (1 + t + ... + t^(e-1))^n.
inline Series truncated_geometric_power(int e, int n) {
  Series s{1};
  Series f(std::size_t(e), 1);
  for (int i = 0; i < n; ++i) s = mul(s, f, s.size() + f.size() - 1);
  return s;
}

using Exps = std::vector<int>;

template <class K>
using SparsePoly = std::map<Exps, K>;

/// Gradings given as rows of per-variable degrees, with a mixing vector such
/// that sum_r mix[r] * rows[r] is positive on every variable.
struct Grades {
  std::vector<std::vector<int>> rows;
  std::vector<int> mix;

  long positive(std::size_t v) const {
    long s = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) s += long(mix[r]) * rows[r][v];
    return s;
  }
  std::vector<int> of(const Exps& e) const {
    std::vector<int> out(rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t v = 0; v < e.size(); ++v) out[r] += rows[r][v] * e[v];
    return out;
  }
};

/// All exponent vectors of the given multidegree.
inline std::vector<Exps> monomials(const Grades& g, const std::vector<int>& target) {
  const std::size_t nv = g.rows[0].size();
  long budget = 0;
  for (std::size_t r = 0; r < g.rows.size(); ++r) budget += long(g.mix[r]) * target[r];
  std::vector<Exps> out;
  if (budget < 0) return out;
  Exps cur(nv, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == nv) {
      if (left == 0 && g.of(cur) == target) out.push_back(cur);
      return;
    }
    const long w = g.positive(i);
    for (int e = 0; long(e) * w <= left; ++e) {
      cur[i] = e;
      rec(i + 1, left - long(e) * w);
    }
    cur[i] = 0;
  };
  rec(0, budget);
  return out;
}

/// Row space rank by incremental elimination with dense pivot rows.
template <class K>
class RowSpace {
public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  void add(std::vector<K> row) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row[c] == K(0)) continue;
      auto it = pivots_.find(c);
      if (it == pivots_.end()) {
        K inv = K(1) / row[c];
        for (auto& x : row) x *= inv;
        pivots_.emplace(c, std::move(row));
        return;
      }
      K factor = row[c];
      const auto& p = it->second;
      for (std::size_t k = c; k < cols_; ++k)
        if (p[k] != K(0)) row[k] -= factor * p[k];
    }
  }
  std::size_t rank() const { return pivots_.size(); }

private:
  std::size_t cols_;
  std::map<std::size_t, std::vector<K>> pivots_;
};

/// Residues modulo a fixed prime, enough arithmetic for RowSpace.
template <std::uint32_t P>
struct Mod {
  std::uint64_t v = 0;
  Mod() = default;
  Mod(long long x) {
    const long long p = P;
    v = std::uint64_t(((x % p) + p) % p);
  }
  friend bool operator==(Mod a, Mod b) { return a.v == b.v; }
  friend bool operator!=(Mod a, Mod b) { return a.v != b.v; }
  friend Mod operator*(Mod a, Mod b) { Mod r; r.v = a.v * b.v % P; return r; }
  friend Mod operator+(Mod a, Mod b) { Mod r; r.v = (a.v + b.v) % P; return r; }
  friend Mod operator-(Mod a, Mod b) { Mod r; r.v = (a.v + P - b.v) % P; return r; }
  Mod& operator*=(Mod b) { return *this = *this * b; }
  Mod& operator-=(Mod b) { return *this = *this - b; }
  friend Mod operator/(Mod a, Mod b) {
    // b^(P-2)
    Mod r(1), base = b;
    for (std::uint64_t e = P - 2; e; e >>= 1) {
      if (e & 1) r = r * base;
      base = base * base;
    }
    return a * r;
  }
};

/// dim of (k[vars] / (gens))_target for generators homogeneous in every
/// grading row. `keep` restricts to a set of monomials that every multiple
/// of a generator lies entirely inside or entirely outside of.
template <class K>
std::size_t quotient_dim(const std::vector<SparsePoly<K>>& gens, const Grades& grades,
                         const std::vector<int>& target,
                         const std::function<bool(const Exps&)>& keep = nullptr) {
  auto cols = monomials(grades, target);
  if (keep) {
    std::vector<Exps> kept;
    for (auto& m : cols)
      if (keep(m)) kept.push_back(m);
    cols = kept;
  }
  std::map<Exps, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
  RowSpace<K> space(cols.size());
  for (const auto& g : gens) {
    auto gdeg = grades.of(g.begin()->first);
    for (std::size_t r = 0; r < gdeg.size(); ++r) gdeg[r] = target[r] - gdeg[r];
    for (const auto& m : monomials(grades, gdeg)) {
      std::vector<K> row(cols.size(), K(0));
      std::size_t in = 0;
      for (const auto& [e, c] : g) {
        Exps prod = e;
        for (std::size_t v = 0; v < prod.size(); ++v) prod[v] += m[v];
        auto it = index.find(prod);
        if (it == index.end()) continue;
        row[it->second] = row[it->second] + c;
        ++in;
      }
      if (in != 0 && in != g.size()) throw std::logic_error("oracle: filter splits a generator multiple");
      if (in) space.add(std::move(row));
    }
  }
  return cols.size() - space.rank();
}

} // namespace oracle
