#include "epist/morphism.hpp"

#include "epist/error.hpp"

#include <numeric>
#include <utility>

namespace epist {

Morphism::Morphism(int d, std::vector<Word> images) : d_(d), images_(std::move(images)) {
  if (d < 1 || d > kMaxAlphabet) throw Error("alphabet size out of range");
  if (images_.size() != static_cast<std::size_t>(d))
    throw Error("morphism needs one image per letter");
  for (const Word& im : images_) {
    if (im.empty()) throw Error("erasing morphism (empty image)");
    for (Letter l : im.letters())
      if (l >= d) throw Error("image letter out of range");
  }
}

Morphism Morphism::identity(int d) {
  std::vector<Word> images;
  images.reserve(d);
  for (int j = 0; j < d; ++j) images.emplace_back(d, std::vector<Letter>{static_cast<Letter>(j)});
  return Morphism(d, std::move(images));
}

Morphism Morphism::elementary(Letter i, int d) {
  if (d < 2) throw Error("elementary morphisms need d >= 2");
  if (i >= d) throw Error("elementary morphism index out of range");
  std::vector<Word> images;
  images.reserve(d);
  for (int j = 0; j < d; ++j) {
    std::vector<Letter> img;
    img.push_back(i);
    if (j != i) img.push_back(static_cast<Letter>(j));
    images.emplace_back(d, std::move(img));
  }
  return Morphism(d, std::move(images));
}

Word apply(const Morphism& m, const Word& w) {
  if (w.alphabet_size() > m.alphabet_size()) throw Error("alphabet mismatch in apply");
  Word out(m.alphabet_size());
  for (Letter l : w.letters()) out.append(m.image(l));
  return out;
}

BigMatrix incidence(const Morphism& m) {
  const int d = m.alphabet_size();
  BigMatrix mat(d);
  for (int j = 0; j < d; ++j)
    for (Letter k : m.image(static_cast<Letter>(j)).letters()) ++mat.at(k, j);
  return mat;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (outer.alphabet_size() != inner.alphabet_size())
    throw Error("alphabet mismatch in compose");
  const int d = outer.alphabet_size();
  std::vector<Word> images;
  images.reserve(d);
  for (int j = 0; j < d; ++j)
    images.push_back(apply(outer, inner.image(static_cast<Letter>(j))));
  return Morphism(d, std::move(images));
}

Permutation::Permutation(std::vector<Letter> mapping) : map_(std::move(mapping)) {
  std::vector<bool> seen(map_.size(), false);
  for (Letter l : map_) {
    if (l >= map_.size() || seen[l]) throw Error("not a bijection");
    seen[l] = true;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<Letter> m(d);
  std::iota(m.begin(), m.end(), Letter{0});
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(int d, Letter a, Letter b) {
  auto p = identity(d);
  std::swap(p.map_[a], p.map_[b]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Letter> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<Letter>(i);
  return Permutation(std::move(inv));
}

BigMatrix permutation_matrix(const Permutation& p) {
  BigMatrix m(p.size());
  for (int i = 0; i < p.size(); ++i) m.at(i, p(static_cast<Letter>(i))) = 1;
  return m;
}

Letter conjugate(const Permutation& p, Letter i) {
  if (i >= p.size()) throw Error("letter out of range");
  return p(i);
}

}  // namespace epist
