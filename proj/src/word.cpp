#include "epist/word.hpp"

#include "epist/error.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

namespace epist {

namespace {

std::vector<long> parse_indices(const std::string& text) {
  std::vector<long> out;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                               text[i] == '\n' || text[i] == '\r'))
      ++i;
  };
  skip_ws();
  if (i == text.size()) return out;
  while (true) {
    skip_ws();
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i)
      throw Error("malformed word near position " + std::to_string(i) + ": " + text);
    i = static_cast<std::size_t>(ptr - text.data());
    if (value < 0) throw Error("negative letter index in word: " + text);
    out.push_back(value);
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',') throw Error("expected ',' in word at position " + std::to_string(i));
    ++i;
  }
  return out;
}

}  // namespace

Word::Word(int d) : d_(d) {
  if (d < 1 || d > kMaxAlphabet)
    throw Error("alphabet size out of range: " + std::to_string(d));
}

Word::Word(int d, std::vector<Letter> letters) : Word(d) {
  for (Letter l : letters)
    if (l >= d) throw Error("letter " + std::to_string(l) + " out of range for d=" + std::to_string(d));
  letters_ = std::move(letters);
}

Word Word::parse(const std::string& text, int d) {
  auto idx = parse_indices(text);
  Word w(d);
  w.letters_.reserve(idx.size());
  for (long v : idx) {
    if (v >= d) throw Error("letter " + std::to_string(v) + " out of range for d=" + std::to_string(d));
    w.letters_.push_back(static_cast<Letter>(v));
  }
  return w;
}

Word Word::parse(const std::string& text) {
  auto idx = parse_indices(text);
  long maxv = 0;
  for (long v : idx) maxv = std::max(maxv, v);
  if (maxv >= kMaxAlphabet) throw Error("letter index exceeds the supported alphabet");
  return parse(text, static_cast<int>(maxv) + 1);
}

void Word::push_back(Letter l) {
  if (l >= d_) throw Error("letter out of range");
  letters_.push_back(l);
}

void Word::append(const Word& w) {
  if (w.d_ > d_) throw Error("alphabet mismatch in append");
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  Word out(d_);
  out.letters_.assign(letters_.begin() + pos, letters_.begin() + pos + len);
  return out;
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(static_cast<int>(letters_[i]));
  }
  return out;
}

std::vector<BigInt> parikh(const Word& w) {
  std::vector<BigInt> counts(w.alphabet_size());
  for (Letter l : w.letters()) ++counts[l];
  return counts;
}

Word reverse(const Word& w) {
  std::vector<Letter> rev(w.letters().rbegin(), w.letters().rend());
  return Word(w.alphabet_size(), std::move(rev));
}

}  // namespace epist
