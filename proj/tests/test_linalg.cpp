#include <catch2/catch_amalgamated.hpp>
#include "cedga/linalg2.hpp"

#include <random>

using namespace cedga;

namespace {
f2::Vec vec(std::size_t n, std::initializer_list<std::size_t> bits) {
  f2::Vec v(n);
  for (auto b : bits) v.set(b);
  return v;
}
}  // namespace

TEST_CASE("rank of simple matrices") {
  // Identity 3x3.
  std::vector<f2::Vec> id = {vec(3, {0}), vec(3, {1}), vec(3, {2})};
  CHECK(f2::rank(id) == 3);
  // Repeated and dependent columns.
  std::vector<f2::Vec> dep = {vec(3, {0, 1}), vec(3, {1, 2}), vec(3, {0, 2})};
  CHECK(f2::rank(dep) == 2);
  CHECK(f2::rank({}) == 0);
  std::vector<f2::Vec> zero = {f2::Vec(4), f2::Vec(4)};
  CHECK(f2::rank(zero) == 0);
}

TEST_CASE("kernel basis spans exactly the null combinations") {
  std::vector<f2::Vec> cols = {vec(3, {0, 1}), vec(3, {1, 2}), vec(3, {0, 2}), f2::Vec(3)};
  auto ker = f2::kernel(cols);
  REQUIRE(ker.size() == 2);
  for (const auto& k : ker) {
    f2::Vec image = f2::apply(cols, k, 3);
    CHECK(image.none());
  }
  CHECK(f2::rank(ker) == 2);
}

TEST_CASE("reducer gives deterministic canonical representatives") {
  f2::Reducer r;
  r.insert(vec(4, {0, 1}));
  r.insert(vec(4, {1, 2}));
  // 0,1 + 1,2 = 0,2; reduce of {0,3} -> {0,3}^{0,1}={1,3}^{1,2}={2,3}.
  auto red = r.reduce(vec(4, {0, 3}));
  CHECK(red == vec(4, {2, 3}));
  // Already in span.
  CHECK_FALSE(r.insert(vec(4, {0, 2})));
  CHECK(r.rank() == 2);
}

TEST_CASE("column reduction satisfies R = D * V with distinct lows") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = 8, colsn = 10;
    std::vector<f2::Vec> D;
    for (std::size_t j = 0; j < colsn; ++j) {
      f2::Vec c(rows);
      for (std::size_t i = 0; i < rows; ++i)
        if (rng() % 2) c.set(i);
      D.push_back(c);
    }
    auto cr = f2::reduce_columns(D);
    std::set<std::size_t> lows;
    for (std::size_t j = 0; j < colsn; ++j) {
      // R[j] == D * V[j]
      CHECK(cr.R[j] == f2::apply(D, cr.V[j], rows));
      // V upper triangular with unit diagonal in processing order.
      CHECK(cr.V[j].test(j));
      for (std::size_t l = j + 1; l < colsn; ++l) CHECK_FALSE(cr.V[j].test(l));
      if (cr.low[j]) {
        CHECK(lows.insert(*cr.low[j]).second);
        CHECK(cr.R[j].find_first() == *cr.low[j]);
      } else {
        CHECK(cr.R[j].none());
      }
    }
  }
}

TEST_CASE("matrix inverse") {
  std::mt19937 rng(777);
  int inverted = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 6;
    std::vector<f2::Vec> A;
    for (std::size_t j = 0; j < n; ++j) {
      f2::Vec c(n);
      for (std::size_t i = 0; i < n; ++i)
        if (rng() % 2) c.set(i);
      A.push_back(c);
    }
    auto inv = f2::invert(A);
    if (f2::rank(A) < n) {
      CHECK_FALSE(inv.has_value());
      continue;
    }
    REQUIRE(inv.has_value());
    ++inverted;
    for (std::size_t j = 0; j < n; ++j) {
      f2::Vec unit = f2::apply(A, (*inv)[j], n);
      f2::Vec expect(n);
      expect.set(j);
      CHECK(unit == expect);
    }
  }
  CHECK(inverted > 0);
}
