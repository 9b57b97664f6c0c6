#pragma once

#include "epist/bigint.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace epist {

using Letter = std::uint8_t;
constexpr int kMaxAlphabet = 256;

/// Finite word over {0, ..., d-1}. Immutable in spirit: operations return
/// new words; the append helpers exist for builders.
class Word {
 public:
  Word() = default;
  explicit Word(int d);
  Word(int d, std::vector<Letter> letters);

  // Comma-separated decimal letter indices; the empty string is the empty
  // word. Letters must be < d.
  static Word parse(const std::string& text, int d);
  // Same, with d inferred as (max letter + 1), at least 1.
  static Word parse(const std::string& text);

  int alphabet_size() const { return d_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  void push_back(Letter l);
  void append(const Word& w);
  Word subword(std::size_t pos, std::size_t len) const;

  std::string str() const;

  // Words compare by their letters; the alphabet size is context, not
  // content (a Fibonacci factor embedded in a ternary prefix is still the
  // same word).
  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  int d_ = 1;
  std::vector<Letter> letters_;
};

std::vector<BigInt> parikh(const Word& w);
Word reverse(const Word& w);

}  // namespace epist
