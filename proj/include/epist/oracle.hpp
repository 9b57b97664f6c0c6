#pragma once

#include "epist/bigint.hpp"
#include "epist/word.hpp"

#include <cstddef>
#include <vector>

// Brute-force ground truth on finite words: fractional powers, bispecial
// factors and return words are read off the letters directly, with no
// matrix machinery. Everything here is exact.
namespace epist::oracle {

/// A maximal fractional power: the factor of the given length at the given
/// occurrence is a prefix of root^w, with |root| = period.
struct RepetitionRecord {
  std::size_t period = 0;
  std::size_t length = 0;
  BigRat exponent;        // length / period
  std::size_t occurrence = 0;
  Word root;
};

// Maximal exponent over all (occurrence, period) pairs; exact rational
// comparisons. Ties resolve to the smallest occurrence, then the smallest
// period. The default runs the per-period scans in parallel; the serial
// variant is the reference. Both return identical records.
RepetitionRecord max_exponent(const Word& w);
RepetitionRecord max_exponent_serial(const Word& w);

struct ExtensionProfile {
  Word factor;
  std::vector<Letter> left, right;  // sorted distinct extension letters
};

// All factors of length <= max_len with at least two left and two right
// extensions, read from occurrences strictly inside the prefix. Requires
// max_len < |prefix|/4 (boundary-safety margin). A scan can only miss
// extensions, never invent them, so re-running on a doubled prefix and
// intersecting filters boundary effects.
std::vector<ExtensionProfile> bispecials_in_prefix(const Word& prefix,
                                                   std::size_t max_len);

// Words between consecutive occurrences of f, sorted by (length, letters).
// Requires at least 3 occurrences of f in the prefix.
std::vector<Word> return_words(const Word& prefix, const Word& f);

}  // namespace epist::oracle
