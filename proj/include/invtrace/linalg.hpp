#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "invtrace/rational.hpp"
#include "invtrace/upoly.hpp"

namespace invtrace {

using QVector = std::vector<Q>;
using QMatrix = std::vector<QVector>;

// Incremental row echelon form that remembers how each stored row was
// combined from the inputs, so a dependent input can be written in terms of
// earlier ones.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  std::size_t rank() const { return rows_.size(); }

  // Reduces v; if it is independent it is stored and nullopt is returned,
  // otherwise returns coefficients c with v = sum c[k] * input_k.
  std::optional<QVector> add(const QVector& v);
  // Same as add() but never stores.
  std::optional<QVector> express(const QVector& v) const;

 private:
  struct Row {
    QVector v;      // reduced vector, pivot entry normalized to 1
    QVector combo;  // v = sum combo[k] * input_k
    std::size_t pivot;
  };
  void reduce(QVector& v, QVector& combo) const;

  std::size_t dim_;
  std::size_t inputs_ = 0;
  std::vector<Row> rows_;
};

// Minimal polynomial of `apply` on the cyclic subspace spanned by v0.
UPoly krylov_minpoly(const std::function<QVector(const QVector&)>& apply, const QVector& v0,
                     std::size_t max_degree);

std::size_t matrix_rank(QMatrix m);
Q determinant(QMatrix m);

}  // namespace invtrace
