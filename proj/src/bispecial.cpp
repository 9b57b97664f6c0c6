#include "epist/bispecial.hpp"

#include "epist/error.hpp"
#include "epist/exponent.hpp"
#include "epist/matrix.hpp"

#include <optional>
#include <utility>

namespace epist {

namespace {

// Images of the composed morphism psi_1 ... psi_n, materialized per letter
// while they fit under the cutoff; exact lengths are always kept (the row
// vector x_j = |q_n(j)|). Oversize images become tombstones and stay so.
class MorphismChain {
 public:
  MorphismChain(const DirectiveSequence& delta, std::size_t cutoff)
      : delta_(delta), cutoff_(cutoff), x_(delta.alphabet_size(), 1) {
    const int d = delta.alphabet_size();
    images_.resize(d);
    for (int j = 0; j < d; ++j)
      images_[j] = std::vector<Letter>{static_cast<Letter>(j)};
  }

  // Absorb psi_{n+1} = phi_c: q(j) <- q(c) q(j) for j != c.
  void advance() {
    const Letter c = delta_.letter_at(n_ + 1);
    const int d = delta_.alphabet_size();
    const auto& base = images_[c];
    for (int j = 0; j < d; ++j) {
      if (j == c) continue;
      BigInt new_len = x_[j] + x_[c];
      if (!base || !images_[j] || new_len > cutoff_) {
        images_[j] = std::nullopt;
        continue;
      }
      std::vector<Letter> img = *base;
      img.insert(img.end(), images_[j]->begin(), images_[j]->end());
      images_[j] = std::move(img);
    }
    row_apply(x_, c);
    ++n_;
  }

  std::int64_t index() const { return n_; }
  const BigVec& lengths() const { return x_; }
  const std::optional<std::vector<Letter>>& image(Letter j) const { return images_[j]; }

 private:
  const DirectiveSequence& delta_;
  std::size_t cutoff_;
  BigVec x_;
  std::vector<std::optional<std::vector<Letter>>> images_;
  std::int64_t n_ = 0;
};

}  // namespace

std::vector<BispecialRecord> bispecial_records(const DirectiveSequence& delta,
                                               std::int64_t n_max,
                                               MaterializeOptions opt) {
  if (n_max < 0) throw Error("N must be nonnegative");
  if (classify(delta).tag != SequenceClass::ArnouxRauzy)
    throw Error("bispecial length formulas require an Arnoux-Rauzy directive");
  const int d = delta.alphabet_size();

  auto s = s_values(delta, n_max);
  std::vector<BispecialRecord> records(n_max + 1);

  // N = 0: b_0 is the empty word; every letter is a return word to it, so
  // the shortest has length 1. We report the first letter of the sequence.
  records[0].n = 0;
  records[0].len_b = 0;
  records[0].len_r = 1;
  if (opt.materialize) {
    records[0].b = Word(d);
    records[0].r = Word(d, {delta.letter_at(1)});
  }

  MorphismChain chain(delta, opt.cutoff);
  std::optional<Word> b_prev = records[0].b;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    BispecialRecord& rec = records[n];
    rec.n = n;
    BigInt num_b = s[n] - d, num_r = s[n] - s[n - 1];
    if (num_b % (d - 1) != 0 || num_r % (d - 1) != 0)
      throw Error("internal arithmetic bug: 1^T (PI - I) 1 not divisible by d-1");
    rec.len_b = num_b / (d - 1);
    rec.len_r = num_r / (d - 1);

    const Letter c = delta.letter_at(n);
    // r_N = psi_1 ... psi_N(i_N) = q_{N-1}(i_N) since phi_{i_N}(i_N) = i_N.
    if (opt.materialize && chain.image(c) && rec.len_r <= opt.cutoff) {
      rec.r = Word(d, *chain.image(c));
      if (BigInt(rec.r->size()) != rec.len_r)
        throw Error("internal arithmetic bug: materialized |r_N| disagrees with the formula");
    }
    if (opt.materialize && rec.r && b_prev && rec.len_b <= opt.cutoff) {
      Word b = *rec.r;
      b.append(*b_prev);
      rec.b = std::move(b);
      if (BigInt(rec.b->size()) != rec.len_b)
        throw Error("internal arithmetic bug: materialized |b_N| disagrees with the formula");
    }
    b_prev = rec.b;
    chain.advance();
  }
  return records;
}

BispecialRecord bispecial_record(const DirectiveSequence& delta, std::int64_t n,
                                 MaterializeOptions opt) {
  return bispecial_records(delta, n, opt).back();
}

}  // namespace epist
