#pragma once

// Brute-force reference routes used as test oracles. These deliberately
// avoid the library's fast paths: matrix products instead of row updates,
// full-space enumeration instead of canonical DFS, per-definition scans
// instead of LCE tables.

#include "epist/directive.hpp"
#include "epist/matrix.hpp"
#include "epist/morphism.hpp"

#include <random>
#include <vector>

namespace testutil {

using epist::BigInt;
using epist::BigRat;
using epist::BigVec;
using epist::Letter;
using epist::Word;

// s_N by a chain of full incidence-matrix multiplications.
inline BigInt s_by_matrices(const epist::DirectiveSequence& delta, std::int64_t n) {
  const int d = delta.alphabet_size();
  epist::BigMatrix prod = epist::BigMatrix::identity(d);
  for (std::int64_t k = 1; k <= n; ++k)
    prod = prod * incidence(epist::Morphism::elementary(delta.letter_at(k), d));
  return ones_product(prod);
}

struct BruteMax {
  BigInt max_value;
  std::vector<std::vector<Letter>> argmax;  // every maximizing word
};

// Maximum of 1^T M_{h_1}..M_{h_n} 1 over all d^n words, by matrix products.
inline BruteMax brute_force_max(int d, int n) {
  BruteMax out;
  std::vector<Letter> word(n, 0);
  while (true) {
    epist::BigMatrix prod = epist::BigMatrix::identity(d);
    for (Letter l : word) prod = prod * incidence(epist::Morphism::elementary(l, d));
    BigInt v = ones_product(prod);
    if (v > out.max_value) {
      out.max_value = v;
      out.argmax = {word};
    } else if (v == out.max_value) {
      out.argmax.push_back(word);
    }
    int pos = n - 1;
    while (pos >= 0 && word[pos] == d - 1) word[pos--] = 0;
    if (pos < 0) break;
    ++word[pos];
  }
  return out;
}

// Plain-definition fractional-power scan: extend every (start, period) pair
// letter by letter.
inline BigRat exhaustive_max_exponent(const Word& w) {
  const std::size_t n = w.size();
  std::size_t best_len = 1, best_p = 1;
  for (std::size_t p = 1; p <= n; ++p)
    for (std::size_t i = 0; i + p <= n; ++i) {
      std::size_t len = p;
      while (i + len < n && w[i + len] == w[i + len - p]) ++len;
      if (static_cast<std::uint64_t>(len) * best_p >
          static_cast<std::uint64_t>(best_len) * p) {
        best_len = len;
        best_p = p;
      }
    }
  return BigRat(best_len, best_p);
}

inline Word random_word(std::mt19937_64& rng, int d, std::size_t len) {
  std::vector<Letter> letters(len);
  for (auto& l : letters) l = static_cast<Letter>(rng() % d);
  return Word(d, std::move(letters));
}

inline BigRat approx(const char* decimal) { return epist::rat_from_decimal(decimal); }

}  // namespace testutil
