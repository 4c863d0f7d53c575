#include <random>

#include <catch_amalgamated.hpp>

#include "wcit/field.hpp"
#include "wcit/linalg.hpp"

using namespace wcit;
using Q = RationalField;

namespace {

Matrix<Q> from_rows(std::vector<std::vector<long>> rows) {
  Matrix<Q> m(Q{}, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = Rational(rows[r][c]);
  return m;
}

} // namespace

TEST_CASE("rank and kernel of small matrices") {
  auto a = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  auto K = kernel(a);
  REQUIRE(K.cols() == 1);
  CHECK((a * K).is_zero());
  CHECK(rank(Matrix<Q>(Q{}, 3, 4)) == 0);
  CHECK(kernel(Matrix<Q>(Q{}, 3, 4)).cols() == 4);
  CHECK(rank(Matrix<Q>::identity(Q{}, 5)) == 5);
  CHECK(kernel(Matrix<Q>::identity(Q{}, 5)).cols() == 0);
}

TEST_CASE("tall and wide matrices") {
  auto tall = from_rows({{1, 1}, {2, 2}, {3, 3}, {0, 1}});
  CHECK(rank(tall) == 2);
  CHECK(rank(tall.transpose()) == 2);
  auto wide = from_rows({{1, 0, 0, 5, 1}, {0, 0, 1, 1, 1}});
  auto K = kernel(wide);
  CHECK(K.cols() == 3);
  CHECK((wide * K).is_zero());
}

TEST_CASE("rank-nullity on random rational matrices") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = size(rng), c = size(rng), k = size(rng);
    // product of an r x k and a k x c matrix has rank <= k
    Matrix<Q> A(Q{}, r, k), B(Q{}, k, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) A(i, j) = Rational(entry(rng));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < c; ++j) B(i, j) = Rational(entry(rng));
    auto M = A * B;
    auto K = kernel(M);
    CHECK(rank(M) + K.cols() == c);
    CHECK(rank(M) <= std::min({r, c, k}));
    CHECK((M * K).is_zero());
    CHECK(rank(K) == K.cols());
  }
}

TEST_CASE("row reduction over a prime field") {
  PrimeField F(7);
  Matrix<PrimeField> m(F, 2, 2);
  m(0, 0) = F.from_int(1);
  m(0, 1) = F.from_int(2);
  m(1, 0) = F.from_int(3);
  m(1, 1) = F.from_int(6); // 3 * (1, 2)
  CHECK(rank(m) == 1);
  auto e = row_reduce(m);
  CHECK(e.pivots == std::vector<std::size_t>{0});
}
