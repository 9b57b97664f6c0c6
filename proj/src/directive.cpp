#include "epist/directive.hpp"

#include "epist/error.hpp"
#include "epist/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace epist {

DirectiveSequence::DirectiveSequence(int d, std::vector<Letter> preperiod,
                                     std::vector<Letter> period)
    : d_(d), pre_(std::move(preperiod)), per_(std::move(period)) {
  if (d < 2 || d > kMaxAlphabet)
    throw Error("directive alphabet size out of range: " + std::to_string(d));
  if (per_.empty()) throw Error("directive period must be non-empty");
  for (Letter l : pre_)
    if (l >= d) throw Error("preperiod letter out of range");
  for (Letter l : per_)
    if (l >= d) throw Error("period letter out of range");
}

Letter DirectiveSequence::letter_at(std::int64_t n) const {
  if (n < 1) throw Error("directive positions are 1-indexed");
  std::size_t idx = static_cast<std::size_t>(n - 1);
  if (idx < pre_.size()) return pre_[idx];
  return per_[(idx - pre_.size()) % per_.size()];
}

std::string DirectiveSequence::str() const {
  auto join = [](const std::vector<Letter>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(static_cast<int>(v[i]));
    }
    return s;
  };
  return join(pre_) + ":" + join(per_);
}

DirectiveSequence parse_directive(const std::string& text, int d) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error("directive must contain ':' separating preperiod and period");
  Word pre = Word::parse(text.substr(0, colon), d);
  Word per = Word::parse(text.substr(colon + 1), d);
  if (per.empty()) throw Error("directive period must be non-empty");
  std::vector<Letter> prev(pre.letters().begin(), pre.letters().end());
  std::vector<Letter> perv(per.letters().begin(), per.letters().end());
  return DirectiveSequence(d, std::move(prev), std::move(perv));
}

Classification classify(const DirectiveSequence& delta) {
  std::set<Letter> distinct(delta.period().begin(), delta.period().end());
  if (distinct.size() == 1) return {SequenceClass::PeriodicEpisturmian, 1};
  if (static_cast<int>(distinct.size()) == delta.alphabet_size())
    return {SequenceClass::ArnouxRauzy, delta.alphabet_size()};
  return {SequenceClass::AperiodicNonAR, static_cast<int>(distinct.size())};
}

Word standard_prefix(const DirectiveSequence& delta, std::size_t length) {
  const int d = delta.alphabet_size();
  if (length == 0) return Word(d);

  // Images of q_k = psi_1 ... psi_k, truncated at `length` letters, plus the
  // exact image lengths x_j = |q_k(j)| = (1^T M_{psi_1}...M_{psi_k})_j.
  // Every image of phi_i starts with i, so q_k(i_{k+1}) is a prefix of the
  // sequence; the chain is nested and its lengths are unbounded unless the
  // directive tail is constant.
  std::vector<std::vector<Letter>> images(d);
  for (int j = 0; j < d; ++j) images[j] = {static_cast<Letter>(j)};
  BigVec x(d, 1);

  const bool periodic = classify(delta).tag == SequenceClass::PeriodicEpisturmian;
  const std::int64_t pre_len = static_cast<std::int64_t>(delta.preperiod().size());
  const BigInt want = length;

  std::int64_t k = 0;
  while (true) {
    const Letter c = delta.letter_at(k + 1);
    if (x[c] >= want) {
      std::vector<Letter> out(images[c].begin(), images[c].begin() + length);
      return Word(d, std::move(out));
    }
    if (periodic && k >= pre_len) {
      // Remaining stream is c^w, so the sequence equals q_k(c^w).
      std::vector<Letter> out;
      out.reserve(length);
      while (out.size() < length) {
        std::size_t take = std::min(length - out.size(), images[c].size());
        out.insert(out.end(), images[c].begin(), images[c].begin() + take);
      }
      return Word(d, std::move(out));
    }
    // Absorb phi_c: q(j) <- q(c) q(j) for j != c.
    for (int j = 0; j < d; ++j) {
      if (j == c) continue;
      std::vector<Letter> img = images[c];
      std::size_t room = length > img.size() ? length - img.size() : 0;
      std::size_t take = std::min(room, images[j].size());
      img.insert(img.end(), images[j].begin(), images[j].begin() + take);
      images[j] = std::move(img);
    }
    row_apply(x, c);
    ++k;
  }
}

ArProjection project_to_ar(const DirectiveSequence& delta) {
  auto cls = classify(delta);
  if (cls.tag == SequenceClass::PeriodicEpisturmian)
    throw Error("periodic directive has no AR projection");

  std::set<Letter> effective(delta.period().begin(), delta.period().end());
  std::vector<Letter> letter_map(effective.begin(), effective.end());
  std::vector<Letter> rename(delta.alphabet_size(), 0);
  for (std::size_t k = 0; k < letter_map.size(); ++k) rename[letter_map[k]] = static_cast<Letter>(k);

  const auto& pre = delta.preperiod();
  std::size_t m = 0;
  for (std::size_t i = 0; i < pre.size(); ++i)
    if (!effective.count(pre[i])) m = i + 1;

  std::vector<Letter> prefix(pre.begin(), pre.begin() + m);
  std::vector<Letter> proj_pre, proj_per;
  for (std::size_t i = m; i < pre.size(); ++i) proj_pre.push_back(rename[pre[i]]);
  for (Letter l : delta.period()) proj_per.push_back(rename[l]);

  int dp = static_cast<int>(letter_map.size());
  return ArProjection{std::move(prefix),
                      DirectiveSequence(dp, std::move(proj_pre), std::move(proj_per)),
                      std::move(letter_map)};
}

bool is_dbonacci_class(const DirectiveSequence& delta) {
  const int d = delta.alphabet_size();
  std::int64_t horizon =
      static_cast<std::int64_t>(delta.preperiod().size() + delta.period().size()) + d;
  for (std::int64_t n = 1; n <= horizon; ++n)
    if (delta.letter_at(n) != delta.letter_at(n + d)) return false;
  std::set<Letter> first;
  for (std::int64_t n = 1; n <= d; ++n) first.insert(delta.letter_at(n));
  return static_cast<int>(first.size()) == d;
}

DirectiveSequence dbonacci_directive(int d) {
  std::vector<Letter> per(d);
  std::iota(per.begin(), per.end(), Letter{0});
  return DirectiveSequence(d, {}, std::move(per));
}

}  // namespace epist
