#include "epist/morphism.hpp"

#include "epist/dbonacci.hpp"
#include "epist/error.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace epist;

namespace {

BigMatrix matrix_from_rows(int d, std::vector<std::vector<int>> rows) {
  BigMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("elementary morphisms") {
  Morphism e0 = Morphism::elementary(0, 2);
  CHECK(e0.image(0) == Word::parse("0", 2));
  CHECK(e0.image(1) == Word::parse("0,1", 2));
  Morphism e1 = Morphism::elementary(1, 2);
  CHECK(e1.image(0) == Word::parse("1,0", 2));
  CHECK(e1.image(1) == Word::parse("1", 2));
  CHECK_THROWS_AS(Morphism::elementary(2, 2), Error);
  CHECK_THROWS_AS(Morphism::elementary(0, 1), Error);
}

TEST_CASE("incidence of phi_2 for d=4 has an all-ones row 2 and unit diagonal") {
  CHECK(incidence(Morphism::elementary(2, 4)) ==
        matrix_from_rows(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, 1}, {0, 0, 0, 1}}));
}

TEST_CASE("incidence of the d-bonacci substitution for d=4") {
  CHECK(incidence(dbonacci_morphism(4)) ==
        matrix_from_rows(4, {{1, 1, 1, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  CHECK(incidence(Morphism::identity(3)) == BigMatrix::identity(3));
}

TEST_CASE("apply") {
  Morphism phi = dbonacci_morphism(4);
  CHECK(apply(phi, Word(4)) == Word(4));
  CHECK(apply(phi, Word::parse("0", 4)) == Word::parse("0,1", 4));
  CHECK(apply(Morphism::elementary(0, 2), Word::parse("0,1", 2)) == Word::parse("0,0,1", 2));
  CHECK(BigInt(apply(phi, Word::parse("0,3,2", 4)).size()) ==
        vec_sum(mat_vec(incidence(phi), parikh(Word::parse("0,3,2", 4)))));
}

TEST_CASE("compose") {
  Morphism e0 = Morphism::elementary(0, 2), e1 = Morphism::elementary(1, 2);
  CHECK(compose(e0, Morphism::identity(2)) == e0);
  Morphism c = compose(e0, e1);
  // Independent route: expand phi_0(phi_1(j)) by two applications.
  for (Letter j : {Letter{0}, Letter{1}})
    CHECK(c.image(j) == apply(e0, apply(e1, Word(2, {j}))));
  CHECK(c.image(0) == Word::parse("0,1,0", 2));
  CHECK(c.image(1) == Word::parse("0,1", 2));
  CHECK(incidence(c) == incidence(e0) * incidence(e1));
}

TEST_CASE("morphism validation") {
  CHECK_THROWS_AS(Morphism(2, {Word(2), Word::parse("0", 2)}), Error);  // erasing
  CHECK_THROWS_AS(Morphism(2, {Word::parse("0", 2)}), Error);           // missing image
}

TEST_CASE("abelianization law on random chains") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 25; ++t) {
    int d = 2 + static_cast<int>(rng() % 3);
    Morphism m = Morphism::elementary(static_cast<Letter>(rng() % d), d);
    for (int k = 0; k < 3; ++k)
      m = compose(m, Morphism::elementary(static_cast<Letter>(rng() % d), d));
    Word w = testutil::random_word(rng, d, rng() % 20);
    CHECK(parikh(apply(m, w)) == mat_vec(incidence(m), parikh(w)));
  }
}

TEST_CASE("permutations and conjugation") {
  Permutation id = Permutation::identity(3);
  CHECK(conjugate(id, 1) == 1);

  // d=2 transposition: P^T M_0 P = M_1, checked entrywise.
  Permutation swap01 = Permutation::transposition(2, 0, 1);
  CHECK(conjugate(swap01, 0) == 1);
  BigMatrix p = permutation_matrix(swap01);
  CHECK(transpose(p) * incidence(Morphism::elementary(0, 2)) * p ==
        incidence(Morphism::elementary(1, 2)));

  // Cycle (0 1 2) on d=3.
  Permutation cyc(std::vector<Letter>{1, 2, 0});
  CHECK(conjugate(cyc, 2) == 0);
  BigMatrix q = permutation_matrix(cyc);
  for (Letter k : {Letter{0}, Letter{1}, Letter{2}})
    CHECK(transpose(q) * incidence(Morphism::elementary(k, 3)) * q ==
          incidence(Morphism::elementary(conjugate(cyc, k), 3)));

  CHECK(cyc.inverse()(0) == 2);
  CHECK_THROWS_AS(Permutation(std::vector<Letter>{0, 0}), Error);
}
