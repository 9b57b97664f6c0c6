#include "epist/word.hpp"

#include "epist/error.hpp"
#include "epist/matrix.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace epist;

TEST_CASE("parikh counts letters") {
  CHECK(parikh(Word(3)) == std::vector<BigInt>{0, 0, 0});
  CHECK(parikh(Word::parse("0,1,0", 2)) == std::vector<BigInt>{2, 1});
  // Fibonacci prefix of length 13.
  Word fib = Word::parse("0,1,0,0,1,0,1,0,0,1,0,0,1", 2);
  CHECK(parikh(fib) == std::vector<BigInt>{8, 5});
}

TEST_CASE("reverse") {
  CHECK(reverse(Word(2)) == Word(2));
  CHECK(reverse(Word::parse("0,1", 2)) == Word::parse("1,0", 2));
  Word pal = Word::parse("0,1,0", 2);
  CHECK(reverse(pal) == pal);
  Word w = Word::parse("0,1,1,0,1", 2);
  CHECK(reverse(reverse(w)) == w);
}

TEST_CASE("parikh sums to the length") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Word w = testutil::random_word(rng, 2 + static_cast<int>(rng() % 4), rng() % 40);
    CHECK(vec_sum(parikh(w)) == BigInt(w.size()));
    CHECK(parikh(reverse(w)) == parikh(w));
  }
}

TEST_CASE("serialization round trip") {
  CHECK(Word(4).str() == "");
  CHECK(Word::parse("", 4).empty());
  Word w = Word::parse("3,0,2", 4);
  CHECK(w.str() == "3,0,2");
  CHECK(Word::parse(w.str(), 4) == w);
  // Multi-digit letters for d > 10.
  Word big = Word::parse("11,0,10", 12);
  CHECK(big.str() == "11,0,10");
  CHECK(big[0] == 11);
}

TEST_CASE("parse validation") {
  CHECK_THROWS_AS(Word::parse("0,2", 2), Error);
  CHECK_THROWS_AS(Word::parse("0,,1", 2), Error);
  CHECK_THROWS_AS(Word::parse("a", 2), Error);
  CHECK_THROWS_AS(Word::parse("-1", 2), Error);
  CHECK(Word::parse("0, 1 ,0", 2).str() == "0,1,0");
  // Inferred alphabet.
  CHECK(Word::parse("0,5,2").alphabet_size() == 6);
}

TEST_CASE("subword and append") {
  Word w = Word::parse("0,1,2,0", 3);
  CHECK(w.subword(1, 2) == Word::parse("1,2", 3));
  Word a = Word::parse("0,1", 3);
  a.append(Word::parse("2", 3));
  CHECK(a.str() == "0,1,2");
}
