#pragma once

#include "epist/directive.hpp"

#include <cstdint>
#include <vector>

namespace epist {

/// Streaming cursor over s_N = 1^T M_{psi_1} ... M_{psi_N} 1. Keeps the row
/// vector x^T exactly and advances in O(d) per step. Single-owner mutable
/// state; use one stream per consumer.
class SStream {
 public:
  explicit SStream(DirectiveSequence delta);

  void advance();
  std::int64_t index() const { return n_; }
  const BigVec& state() const { return x_; }
  BigInt s() const;

 private:
  DirectiveSequence delta_;
  BigVec x_;
  std::int64_t n_ = 0;
};

// s_0, ..., s_nmax; s_0 = d.
std::vector<BigInt> s_values(const DirectiveSequence& delta, std::int64_t n_max);

enum class ExponentKind { Exact, SupCandidate, LimitEstimate, Infinite };

/// Enclosure [lo, hi] of E or E* with attainment metadata.
///  - Exact:         proven value (d-bonacci class); enclosure from the root.
///  - SupCandidate:  best finite candidate; a certified lower bound of E,
///                   not proven to be attained.
///  - LimitEstimate: limsup estimate with user tolerance.
///  - Infinite:      periodic sequence; lo/hi are meaningless.
struct ExponentEstimate {
  BigRat lo, hi;
  ExponentKind kind = ExponentKind::SupCandidate;
  std::int64_t witness_n = -1;   // N attaining the finite sup, when tracked
  BigRat finite_sup;             // exact rational 1 + max ratio over N <= n_max
  bool has_finite_sup = false;
};

// E(u) = 1 + sup (s_N - d)/(s_N - s_{N-1}). Reports the exact rational sup
// over 1 <= N <= n_max together with the limit estimate; marked Exact for
// d-bonacci-class directives. Aperiodic non-AR directives are handled
// through their AR projection and accepted only when the projection is a
// plain letter renaming (no morphism prefix).
ExponentEstimate critical_exponent(const DirectiveSequence& delta, std::int64_t n_max);

// E*(u) = 1 + limsup s_N/(s_N - s_{N-1}), via per-residue-class convergence
// of the exact ratios; stops when each class moved less than tol over two
// consecutive period sweeps. For aperiodic non-AR directives the value is
// computed on the AR projection, which lower-bounds E* of the full sequence.
ExponentEstimate asymptotic_exponent(const DirectiveSequence& delta, const BigRat& tol);

struct AsymptoticOptions {
  BigRat tol = BigRat(1, 1000000000);
  std::int64_t max_steps = 200'000;
};
ExponentEstimate asymptotic_exponent(const DirectiveSequence& delta,
                                     const AsymptoticOptions& opt);

// Empirical letter frequencies on standard_prefix(delta, length).
std::vector<double> letter_frequencies(const DirectiveSequence& delta, std::size_t length);

}  // namespace epist
