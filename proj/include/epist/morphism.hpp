#pragma once

#include "epist/matrix.hpp"
#include "epist/word.hpp"

#include <vector>

namespace epist {

/// Non-erasing morphism on {0,...,d-1}^*, given by the images of letters.
class Morphism {
 public:
  Morphism(int d, std::vector<Word> images);
  static Morphism identity(int d);
  // phi_i: i -> i, j -> i j for j != i.
  static Morphism elementary(Letter i, int d);

  int alphabet_size() const { return d_; }
  const Word& image(Letter j) const { return images_[j]; }

  bool operator==(const Morphism&) const = default;

 private:
  int d_;
  std::vector<Word> images_;
};

Word apply(const Morphism& m, const Word& w);
// Column j is the Parikh vector of the image of j.
BigMatrix incidence(const Morphism& m);
// Image of j is outer(inner(j)); incidence is the matrix product.
Morphism compose(const Morphism& outer, const Morphism& inner);

/// Bijection on {0,...,d-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<Letter> mapping);
  static Permutation identity(int d);
  static Permutation transposition(int d, Letter a, Letter b);

  int size() const { return static_cast<int>(map_.size()); }
  Letter operator()(Letter i) const { return map_[i]; }
  Permutation inverse() const;

 private:
  std::vector<Letter> map_;
};

// Matrix P with e_i^T P = e_{pi(i)}^T.
BigMatrix permutation_matrix(const Permutation& p);
// Returns pi(i); satisfies P^T M_i P = M_{pi(i)} exactly.
Letter conjugate(const Permutation& p, Letter i);

}  // namespace epist
