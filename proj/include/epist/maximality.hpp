#pragma once

#include "epist/bigint.hpp"
#include "epist/word.hpp"

#include <cstdint>
#include <vector>

namespace epist {

/// Finite list of morphism indices h_1,...,h_N over {0,...,d-1}.
struct DirectiveWord {
  int d = 2;
  std::vector<Letter> letters;

  friend bool operator==(const DirectiveWord& a, const DirectiveWord& b) {
    return a.d == b.d && a.letters == b.letters;
  }
  friend auto operator<=>(const DirectiveWord& a, const DirectiveWord& b) {
    return a.letters <=> b.letters;
  }
};

// True iff every window of length min(d, |w|) has pairwise distinct letters.
bool window_distinct(const DirectiveWord& w);

// Lexicographically least image of w under letter permutations: letters are
// renamed in order of first appearance. The value 1^T M_{h_1}...M_{h_N} 1 is
// invariant under this action.
DirectiveWord canonicalize(const DirectiveWord& w);

// All distinct permutation images of a word, sorted.
std::vector<DirectiveWord> permutation_orbit(const DirectiveWord& w);

struct SearchResult {
  int d = 0;
  std::int64_t n = 0;
  BigInt max_value;
  std::vector<DirectiveWord> argmax;  // canonical representatives, sorted
  std::int64_t explored = 0;          // words (leaves) evaluated
  std::int64_t steps = 0;             // row-update steps spent
};

struct SearchOptions {
  std::int64_t budget = 100'000'000;  // row-update steps
  bool parallel = true;
};

// Exact maximum of { 1^T M_{h_1} ... M_{h_N} 1 } over all d^N directive
// words, searched over canonical representatives only (DFS with incremental
// O(d) row updates). Throws BudgetError if the projected step count exceeds
// the budget.
SearchResult enumerate_max(int d, std::int64_t n, SearchOptions opt = {});

// Serial reference implementation; identical results, no worker fan-out.
SearchResult enumerate_max_serial(int d, std::int64_t n, SearchOptions opt = {});

}  // namespace epist
