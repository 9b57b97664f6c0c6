#pragma once

#include "epist/bigint.hpp"
#include "epist/word.hpp"

#include <vector>

namespace epist {

using BigVec = std::vector<BigInt>;

/// Square d x d matrix with exact nonnegative integer entries, row-major.
class BigMatrix {
 public:
  BigMatrix() = default;
  explicit BigMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  static BigMatrix identity(int n);

  int size() const { return n_; }
  BigInt& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const BigInt& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * n_ + c];
  }

  bool operator==(const BigMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<BigInt> a_;
};

BigMatrix operator*(const BigMatrix& a, const BigMatrix& b);
BigMatrix operator-(const BigMatrix& a, const BigMatrix& b);
BigMatrix transpose(const BigMatrix& m);

BigVec mat_vec(const BigMatrix& m, const BigVec& v);   // M v
BigVec vec_mat(const BigVec& x, const BigMatrix& m);   // x^T M
BigInt vec_sum(const BigVec& v);
BigInt ones_product(const BigMatrix& m);               // 1^T M 1

// x^T <- x^T M_i for the elementary incidence matrix M_i, in O(d):
// x_j += x_i for every j != i, x_i unchanged.
void row_apply(BigVec& x, Letter i);

}  // namespace epist
