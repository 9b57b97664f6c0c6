#pragma once

#include "epist/directive.hpp"

#include <optional>

namespace epist {

/// The N-th bispecial factor b_N of an AR sequence, its shortest return
/// word r_N, and their exact lengths. b_N = r_N b_{N-1}; words are
/// materialized only while they fit under the length cutoff.
struct BispecialRecord {
  std::int64_t n = 0;
  BigInt len_b, len_r;
  std::optional<Word> b, r;
};

struct MaterializeOptions {
  bool materialize = true;
  std::size_t cutoff = 1'000'000;  // letters
};

// Requires classify(delta) == ArnouxRauzy; the length formulas are stated
// for AR sequences only.
BispecialRecord bispecial_record(const DirectiveSequence& delta, std::int64_t n,
                                 MaterializeOptions opt = {});

// Records for N = 0..n_max in one pass.
std::vector<BispecialRecord> bispecial_records(const DirectiveSequence& delta,
                                               std::int64_t n_max,
                                               MaterializeOptions opt = {});

}  // namespace epist
