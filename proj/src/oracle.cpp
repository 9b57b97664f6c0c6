#include "epist/oracle.hpp"

#include "epist/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace epist::oracle {

namespace {

struct Candidate {
  std::size_t len = 0, occ = 0, period = 0;
  bool valid = false;
};

// Exponent order with the deterministic tie-break: larger len/period first,
// then smaller occurrence, then smaller period.
bool better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  // a.len/a.period vs b.len/b.period by cross-multiplication; lengths are
  // bounded by the word length, so this stays inside 64 bits.
  auto lhs = static_cast<std::uint64_t>(a.len) * b.period;
  auto rhs = static_cast<std::uint64_t>(b.len) * a.period;
  if (lhs != rhs) return lhs > rhs;
  if (a.occ != b.occ) return a.occ < b.occ;
  return a.period < b.period;
}

// Best repetition with the given period: scan longest common extensions of
// positions i and i+p right to left.
Candidate best_for_period(const Word& w, std::size_t p) {
  const std::size_t n = w.size();
  Candidate best;
  std::size_t lce_next = 0;  // lce at i+1
  for (std::size_t ii = n - p + 1; ii-- > 0;) {
    std::size_t lce = 0;
    if (ii + p < n && w[ii] == w[ii + p]) lce = lce_next + 1;
    lce_next = lce;
    Candidate c{p + lce, ii, p, true};
    if (better(c, best)) best = c;
  }
  return best;
}

RepetitionRecord to_record(const Word& w, const Candidate& c) {
  RepetitionRecord rec;
  rec.period = c.period;
  rec.length = c.len;
  rec.exponent = BigRat(c.len, c.period);
  rec.occurrence = c.occ;
  rec.root = w.subword(c.occ, c.period);
  return rec;
}

}  // namespace

RepetitionRecord max_exponent(const Word& w) {
  const std::size_t n = w.size();
  if (n < 1) throw Error("max_exponent needs a non-empty word");
  std::vector<Candidate> per_period(n + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::size_t p = 1; p <= n; ++p) per_period[p] = best_for_period(w, p);
  Candidate best;
  for (std::size_t p = 1; p <= n; ++p)
    if (better(per_period[p], best)) best = per_period[p];
  return to_record(w, best);
}

RepetitionRecord max_exponent_serial(const Word& w) {
  const std::size_t n = w.size();
  if (n < 1) throw Error("max_exponent needs a non-empty word");
  Candidate best;
  for (std::size_t p = 1; p <= n; ++p) {
    Candidate c = best_for_period(w, p);
    if (better(c, best)) best = c;
  }
  return to_record(w, best);
}

std::vector<ExtensionProfile> bispecials_in_prefix(const Word& prefix,
                                                   std::size_t max_len) {
  const std::size_t n = prefix.size();
  if (max_len * 4 >= n)
    throw Error("boundary-safety margin violated: need maxLen < |prefix|/4");

  std::string bytes(prefix.letters().begin(), prefix.letters().end());
  std::vector<ExtensionProfile> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::map<std::string_view, std::pair<std::set<Letter>, std::set<Letter>>> table;
    for (std::size_t i = 1; i + len + 1 <= n; ++i) {
      auto& [left, right] = table[std::string_view(bytes).substr(i, len)];
      left.insert(prefix[i - 1]);
      right.insert(prefix[i + len]);
    }
    for (auto& [view, ext] : table) {
      if (ext.first.size() < 2 || ext.second.size() < 2) continue;
      ExtensionProfile prof;
      prof.factor = Word(prefix.alphabet_size(),
                         std::vector<Letter>(view.begin(), view.end()));
      prof.left.assign(ext.first.begin(), ext.first.end());
      prof.right.assign(ext.second.begin(), ext.second.end());
      out.push_back(std::move(prof));
    }
  }
  return out;
}

std::vector<Word> return_words(const Word& prefix, const Word& f) {
  const std::size_t n = prefix.size(), m = f.size();
  std::vector<std::size_t> occ;
  for (std::size_t i = 0; i + m <= n; ++i) {
    bool match = true;
    for (std::size_t j = 0; j < m; ++j)
      if (prefix[i + j] != f[j]) {
        match = false;
        break;
      }
    if (match) occ.push_back(i);
  }
  if (occ.size() < 3)
    throw Error("factor occurs fewer than 3 times; the return-word set would be unreliable");

  auto cmp = [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::set<Word, decltype(cmp)> words(cmp);
  for (std::size_t k = 0; k + 1 < occ.size(); ++k)
    words.insert(prefix.subword(occ[k], occ[k + 1] - occ[k]));
  return std::vector<Word>(words.begin(), words.end());
}

}  // namespace epist::oracle
