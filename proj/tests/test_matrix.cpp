#include "epist/matrix.hpp"

#include "epist/dbonacci.hpp"
#include "epist/error.hpp"
#include "epist/morphism.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace epist;

TEST_CASE("mat_vec basics") {
  CHECK(mat_vec(BigMatrix::identity(2), {1, 2}) == BigVec{1, 2});
  // M_{phi_0} for d=2 maps the Parikh vector of "1" to that of "01".
  BigMatrix m0 = incidence(Morphism::elementary(0, 2));
  CHECK(mat_vec(m0, {0, 1}) == BigVec{1, 1});
  CHECK_THROWS_AS(mat_vec(m0, {1, 2, 3}), Error);
}

TEST_CASE("d-bonacci incidence times ones for d=4") {
  BigMatrix m = incidence(dbonacci_morphism(4));
  CHECK(mat_vec(m, {1, 1, 1, 1}) == BigVec{4, 1, 1, 1});
}

TEST_CASE("mat_vec distributes over vector addition") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    int d = 2 + static_cast<int>(rng() % 4);
    BigMatrix m(d);
    BigVec u(d), v(d), sum(d);
    for (int i = 0; i < d; ++i) {
      u[i] = static_cast<int>(rng() % 100);
      v[i] = static_cast<int>(rng() % 100);
      sum[i] = u[i] + v[i];
      for (int j = 0; j < d; ++j) m.at(i, j) = static_cast<int>(rng() % 9);
    }
    BigVec rhs = mat_vec(m, u), mv = mat_vec(m, v);
    for (int i = 0; i < d; ++i) rhs[i] += mv[i];
    CHECK(mat_vec(m, sum) == rhs);
  }
}

TEST_CASE("row update equals the full product") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    int d = 2 + static_cast<int>(rng() % 5);
    BigVec x(d);
    for (auto& v : x) v = static_cast<int>(rng() % 1000);
    Letter i = static_cast<Letter>(rng() % d);
    BigVec fast = x;
    row_apply(fast, i);
    CHECK(fast == vec_mat(x, incidence(Morphism::elementary(i, d))));
  }
}

TEST_CASE("matrix algebra helpers") {
  BigMatrix a(2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  BigMatrix at = transpose(a);
  CHECK(at.at(0, 1) == 3);
  CHECK(ones_product(a) == 10);
  BigMatrix i2 = BigMatrix::identity(2);
  CHECK(a * i2 == a);
  CHECK((a - a) == BigMatrix(2));
  CHECK_THROWS_AS(a * BigMatrix(3), Error);
}
