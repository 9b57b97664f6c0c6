#include "epist/matrix.hpp"

#include "epist/error.hpp"

namespace epist {

BigMatrix BigMatrix::identity(int n) {
  BigMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BigMatrix operator*(const BigMatrix& a, const BigMatrix& b) {
  if (a.size() != b.size()) throw Error("matrix dimension mismatch");
  const int n = a.size();
  BigMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

BigMatrix operator-(const BigMatrix& a, const BigMatrix& b) {
  if (a.size() != b.size()) throw Error("matrix dimension mismatch");
  const int n = a.size();
  BigMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

BigMatrix transpose(const BigMatrix& m) {
  const int n = m.size();
  BigMatrix t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at(i, j) = m.at(j, i);
  return t;
}

BigVec mat_vec(const BigMatrix& m, const BigVec& v) {
  if (static_cast<std::size_t>(m.size()) != v.size())
    throw Error("matrix-vector dimension mismatch");
  const int n = m.size();
  BigVec out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

BigVec vec_mat(const BigVec& x, const BigMatrix& m) {
  if (static_cast<std::size_t>(m.size()) != x.size())
    throw Error("vector-matrix dimension mismatch");
  const int n = m.size();
  BigVec out(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out[j] += x[i] * m.at(i, j);
  return out;
}

BigInt vec_sum(const BigVec& v) {
  BigInt s = 0;
  for (const BigInt& c : v) s += c;
  return s;
}

BigInt ones_product(const BigMatrix& m) {
  BigInt s = 0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) s += m.at(i, j);
  return s;
}

void row_apply(BigVec& x, Letter i) {
  const BigInt& xi = x[i];
  for (std::size_t j = 0; j < x.size(); ++j)
    if (j != i) x[j] += xi;
}

}  // namespace epist
