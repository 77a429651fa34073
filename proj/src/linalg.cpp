#include "invtrace/linalg.hpp"

#include "invtrace/errors.hpp"

namespace invtrace {

void Echelon::reduce(QVector& v, QVector& acc) const {
  for (const auto& row : rows_) {
    if (v[row.pivot] == 0) continue;
    Q f = v[row.pivot];
    for (std::size_t i = 0; i < dim_; ++i)
      if (row.v[i] != 0) v[i] -= f * row.v[i];
    if (acc.size() < row.combo.size()) acc.resize(row.combo.size());
    for (std::size_t k = 0; k < row.combo.size(); ++k)
      if (row.combo[k] != 0) acc[k] += f * row.combo[k];
  }
}

std::optional<QVector> Echelon::express(const QVector& v) const {
  QVector w = v, acc;
  reduce(w, acc);
  for (const auto& x : w)
    if (x != 0) return std::nullopt;
  acc.resize(inputs_);
  return acc;
}

std::optional<QVector> Echelon::add(const QVector& v) {
  if (v.size() != dim_) throw Error("Echelon: dimension mismatch");
  QVector w = v, acc;
  reduce(w, acc);
  std::size_t pivot = dim_;
  for (std::size_t i = 0; i < dim_; ++i)
    if (w[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == dim_) {
    acc.resize(inputs_);
    ++inputs_;
    return acc;
  }
  // w = input_new - acc . inputs
  QVector combo(inputs_ + 1);
  for (std::size_t k = 0; k < acc.size(); ++k) combo[k] = -acc[k];
  combo[inputs_] = 1;
  Q inv = 1 / w[pivot];
  for (auto& x : w) x *= inv;
  for (auto& x : combo) x *= inv;
  rows_.push_back({std::move(w), std::move(combo), pivot});
  ++inputs_;
  return std::nullopt;
}

UPoly krylov_minpoly(const std::function<QVector(const QVector&)>& apply, const QVector& v0,
                     std::size_t max_degree) {
  Echelon ech(v0.size());
  QVector v = v0;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    auto dep = ech.add(v);
    if (dep) {
      std::vector<Q> c(k + 1);
      for (std::size_t j = 0; j < k; ++j) c[j] = -(*dep)[j];
      c[k] = 1;
      return UPoly(std::move(c));
    }
    v = apply(v);
  }
  throw Error("krylov_minpoly: degree bound exceeded");
}

std::size_t matrix_rank(QMatrix m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Q f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

Q determinant(QMatrix m) {
  std::size_t n = m.size();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Q f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace invtrace
