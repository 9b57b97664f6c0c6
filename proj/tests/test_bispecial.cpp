#include "epist/bispecial.hpp"

#include "epist/error.hpp"
#include "epist/exponent.hpp"
#include "epist/oracle.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace epist;

TEST_CASE("Fibonacci bispecial records") {
  DirectiveSequence fib = parse_directive(":0,1", 2);
  auto recs = bispecial_records(fib, 4);

  CHECK(recs[0].len_b == 0);
  CHECK(*recs[0].b == Word(2));

  std::vector<int> len_b, len_r;
  for (int n = 1; n <= 4; ++n) {
    len_b.push_back(static_cast<int>(recs[n].len_b));
    len_r.push_back(static_cast<int>(recs[n].len_r));
  }
  CHECK(len_b == std::vector<int>{1, 3, 6, 11});
  CHECK(len_r == std::vector<int>{1, 2, 3, 5});
  CHECK(recs[2].b->str() == "0,1,0");
  CHECK(recs[2].r->str() == "0,1");

  // lenB = s_N - 2 with s = 2,3,5,8,13 for the Fibonacci directive.
  auto s = s_values(fib, 4);
  CHECK(s == std::vector<BigInt>{2, 3, 5, 8, 13});
  for (int n = 1; n <= 4; ++n) CHECK(recs[n].len_b == s[n] - 2);
}

TEST_CASE("records satisfy b_N = r_N b_{N-1}") {
  DirectiveSequence fib = parse_directive(":0,1", 2);
  auto recs = bispecial_records(fib, 8);
  for (int n = 1; n <= 8; ++n) {
    Word expect = *recs[n].r;
    expect.append(*recs[n - 1].b);
    CHECK(*recs[n].b == expect);
    CHECK(recs[n].len_b == recs[n].len_r + recs[n - 1].len_b);
    CHECK(BigInt(recs[n].b->size()) == recs[n].len_b);
  }
  // Every b_N is a prefix of the sequence (left special factors of a
  // standard sequence are prefixes).
  Word prefix = standard_prefix(fib, static_cast<std::size_t>(recs[8].len_b));
  CHECK(*recs[8].b == prefix);
}

TEST_CASE("Tribonacci third bispecial factor") {
  DirectiveSequence trib = parse_directive(":0,1,2", 3);
  auto rec = bispecial_record(trib, 3);
  CHECK(rec.len_b == 7);  // (s_3 - 3)/2 = (17-3)/2
  CHECK(rec.b->str() == "0,1,0,2,0,1,0");
  // The constructed factor shows up in an oracle scan of a plain prefix.
  Word prefix = standard_prefix(trib, 500);
  auto profiles = oracle::bispecials_in_prefix(prefix, 8);
  bool found = false;
  for (const auto& p : profiles)
    if (p.factor == *rec.b) found = true;
  CHECK(found);
}

TEST_CASE("oracle cross-check of b_N and r_N on Fibonacci") {
  DirectiveSequence fib = parse_directive(":0,1", 2);
  auto recs = bispecial_records(fib, 5);
  Word prefix = standard_prefix(fib, 800);
  auto profiles = oracle::bispecials_in_prefix(prefix, 12);
  for (int n = 0; n <= 5; ++n) {
    if (recs[n].len_b > 12) continue;
    bool found = false;
    for (const auto& p : profiles)
      if (p.factor == *recs[n].b) found = true;
    CHECK(found);
    auto rets = oracle::return_words(prefix, *recs[n].b);
    REQUIRE(!rets.empty());
    CHECK(BigInt(rets.front().size()) == recs[n].len_r);
    CHECK(std::find(rets.begin(), rets.end(), *recs[n].r) != rets.end());
  }
}

TEST_CASE("materialization cutoff") {
  DirectiveSequence fib = parse_directive(":0,1", 2);
  auto rec = bispecial_record(fib, 4, {.materialize = true, .cutoff = 5});
  CHECK(rec.len_b == 11);
  CHECK(!rec.b.has_value());      // 11 > 5
  CHECK(rec.r.has_value());       // 5 <= 5
  CHECK(rec.len_r == 5);

  auto none = bispecial_record(fib, 4, {.materialize = false});
  CHECK(!none.b.has_value());
  CHECK(!none.r.has_value());
  CHECK(none.len_b == 11);
}

TEST_CASE("rejects non-AR directives") {
  CHECK_THROWS_AS(bispecial_record(parse_directive(":0,1", 3), 2), Error);
  CHECK_THROWS_AS(bispecial_record(parse_directive("0:1", 2), 2), Error);
}

TEST_CASE("lengths on a lopsided AR directive agree with matrix products") {
  DirectiveSequence delta = parse_directive("1:0,0,1,1", 2);
  auto recs = bispecial_records(delta, 7);
  for (int n = 1; n <= 7; ++n) {
    BigInt s_n = testutil::s_by_matrices(delta, n);
    BigInt s_prev = testutil::s_by_matrices(delta, n - 1);
    CHECK(recs[n].len_b == s_n - 2);
    CHECK(recs[n].len_r == s_n - s_prev);
    CHECK(BigInt(recs[n].b->size()) == recs[n].len_b);
  }
}
