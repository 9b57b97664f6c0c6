#include "epist/dbonacci.hpp"

#include "epist/error.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace epist;
using testutil::approx;

TEST_CASE("Pisot root enclosure") {
  RatInterval t = pisot_root_enclosure(2, 100);
  CHECK(t.width() <= BigRat(1, pow2(100)));
  // Golden ratio.
  CHECK(abs(t.mid() - approx("1.6180339887498948482")) < approx("1e-18"));
  // Property 1 bracket.
  for (int d = 2; d <= 8; ++d) {
    RatInterval iv = pisot_root_enclosure(d, 80);
    CHECK(iv.lo > 2 - BigRat(1, pow2(d - 1)));
    CHECK(iv.hi < 2 - BigRat(1, pow2(d)));
  }
  // Deep enclosure for the certified inequality checks.
  RatInterval deep = pisot_root_enclosure(3, 5000);
  CHECK(deep.width() <= BigRat(1, pow2(5000)));
}

TEST_CASE("constants for d=2 expose both golden-ratio roots") {
  auto cs = dbonacci_constants(2, 128);
  REQUIRE(cs.roots.size() == 2);
  CHECK(abs(cs.roots[0].re - approx("1.61803398874989484820458683436564")) < approx("1e-30"));
  CHECK(cs.roots[0].im == 0);
  CHECK(abs(cs.roots[1].re - approx("-0.61803398874989484820458683436564")) < approx("1e-25"));
  CHECK(abs(cs.roots[1].im) < approx("1e-25"));
  CHECK(abs(cs.critical_exponent.lo - approx("3.61803398874989484820458683436564")) <
        approx("1e-25"));
}

TEST_CASE("threshold table reproduces the known values") {
  const char* t_expect[] = {"1.618", "1.839", "1.928", "1.966", "1.984", "1.992"};
  const char* e_expect[] = {"3.618", "3.191", "3.078", "3.035", "3.017", "3.008"};
  auto rows = threshold_table(7, 96);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(abs(rows[i].t.mid() - approx(t_expect[i])) < approx("5e-4"));
    CHECK(abs(rows[i].e.mid() - approx(e_expect[i])) < approx("5e-4"));
  }
  // Sandwich bounds for d=4: 3 + 1/15 < E < 3 + 1/7.
  CHECK(rows[2].e.lo > BigRat(46, 15));
  CHECK(rows[2].e.hi < BigRat(22, 7));
  // Strict monotonicity of the E column.
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].e.hi < rows[i - 1].e.lo);
}

TEST_CASE("s_recurrence") {
  CHECK(s_recurrence_values(2, 5) == std::vector<BigInt>{2, 3, 5, 8, 13, 21});
  CHECK(s_recurrence_values(3, 4) == std::vector<BigInt>{3, 5, 9, 17, 31});
  CHECK(s_recurrence(4, 3) == 25);  // (d-1) 2^N + 1 in the initial segment
  // The d-term recurrence itself, spot-checked deep.
  auto s = s_recurrence_values(4, 60);
  for (int n = 4; n <= 60; ++n)
    CHECK(s[n] == s[n - 1] + s[n - 2] + s[n - 3] + s[n - 4]);
}

TEST_CASE("explicit formula reproduces the recurrence") {
  auto ev = explicit_eval(2, 10, 128);
  CHECK(s_recurrence(2, 10) == 233);
  CHECK(abs(ev.value - 233) < approx("1e-9"));
  CHECK(abs(ev.value - 233) <= ev.error_bound);

  auto ev0 = explicit_eval(3, 0, 128);
  CHECK(abs(ev0.value - 3) < approx("1e-9"));

  auto ev40 = explicit_eval(6, 40, 128);
  CHECK(abs(ev40.value - BigRat(s_recurrence(6, 40))) < approx("1e-6"));
}

TEST_CASE("inequality certificate") {
  auto cert = verify_inequality(2, 2000);
  CHECK(cert.pass);
  CHECK(cert.checked == 2000);

  // Perturbing t by +0.1 breaks the inequality at small N.
  RatInterval t = pisot_root_enclosure(2, 80);
  RatInterval bad{t.lo + BigRat(1, 10), t.hi + BigRat(1, 10)};
  auto fail = verify_inequality_with_root(2, 100, bad);
  CHECK(!fail.pass);
  CHECK(fail.first_violation == 6);

  CHECK_THROWS_AS(verify_inequality(2, 0), Error);
}

TEST_CASE("d-bonacci substitution images") {
  Morphism m = dbonacci_morphism(4);
  CHECK(m.image(0).str() == "0,1");
  CHECK(m.image(1).str() == "0,2");
  CHECK(m.image(2).str() == "0,3");
  CHECK(m.image(3).str() == "0");
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(dbonacci_constants(1, 128), Error);
  CHECK_THROWS_AS(dbonacci_constants(3, 32), Error);
  CHECK_THROWS_AS(dbonacci_constants(3, 4096), Error);
  CHECK_THROWS_AS(threshold_table(1), Error);
}
