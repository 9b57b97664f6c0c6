#pragma once

#include "epist/morphism.hpp"
#include "epist/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace epist {

/// Eventually periodic stream of elementary-morphism indices. The stream is
/// preperiod followed by the period repeated forever.
class DirectiveSequence {
 public:
  DirectiveSequence(int d, std::vector<Letter> preperiod, std::vector<Letter> period);

  int alphabet_size() const { return d_; }
  const std::vector<Letter>& preperiod() const { return pre_; }
  const std::vector<Letter>& period() const { return per_; }

  // 1-indexed stream access: letter_at(1) is the first morphism index.
  Letter letter_at(std::int64_t n) const;

  std::string str() const;  // "pre:per", round-trips through parse_directive

 private:
  int d_;
  std::vector<Letter> pre_, per_;
};

// Grammar: "pre:per" or ":per"; pre and per are comma-separated letter
// indices and per must be non-empty.
DirectiveSequence parse_directive(const std::string& text, int d);

enum class SequenceClass { PeriodicEpisturmian, ArnouxRauzy, AperiodicNonAR };

struct Classification {
  SequenceClass tag;
  // Distinct letters in the period: d for Arnoux-Rauzy, 1 for periodic,
  // and the effective alphabet size d' otherwise.
  int effective_alphabet;
};

Classification classify(const DirectiveSequence& delta);

// Length-L prefix of the standard episturmian sequence directed by delta.
Word standard_prefix(const DirectiveSequence& delta, std::size_t length);

/// Decomposition u = phi_{prefix[1]} ... phi_{prefix[m]} (v) of an aperiodic
/// episturmian sequence into a morphism prefix and an AR sequence v over the
/// effective alphabet, renamed to {0,...,d'-1}.
struct ArProjection {
  std::vector<Letter> prefix;       // peeled-off morphism indices, original letters
  DirectiveSequence projected;      // AR directive over {0,...,d'-1}
  std::vector<Letter> letter_map;   // effective letter -> original letter
};

ArProjection project_to_ar(const DirectiveSequence& delta);

// True iff the stream is, after one letter renaming, a rotation of the
// cyclic stream (0 1 ... d-1)^w, i.e. the sequence is a d-bonacci sequence
// up to renaming.
bool is_dbonacci_class(const DirectiveSequence& delta);

DirectiveSequence dbonacci_directive(int d);

}  // namespace epist
