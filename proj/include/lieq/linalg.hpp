#pragma once

#include <optional>
#include <vector>

#include "lieq/rational.hpp"

namespace lieq {

/// Dense matrix over the rationals. Row-major, exact arithmetic throughout.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static QMat identity(int n);
  static QMat from_rows(const std::vector<QVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  QVec row(int i) const;
  void set_row(int i, const QVec& v);

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat scaled(const Rat& c) const;
  bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  QVec apply(const QVec& x) const;  // M x
  QMat transpose() const;
  Rat trace() const;
  bool is_zero() const;
  QVec flatten() const { return a_; }  // row-major

  // trace(A * B) without forming the product
  static Rat trace_of_product(const QMat& A, const QMat& B);

 private:
  int rows_, cols_;
  QVec a_;
};

/// In-place reduced row echelon form (pivots normalized to 1, cleared above
/// and below). Returns the rank; pivot columns appended to *pivots if given.
int rref(QMat& m, std::vector<int>* pivots = nullptr);

int rank_of(QMat m);

/// Canonical basis of {x : M x = 0}; rows of the result are the basis vectors.
QMat kernel_basis(const QMat& m);

/// One solution of A x = b, if any.
std::optional<QVec> solve(const QMat& a, const QVec& b);

/// Basis (rows) of the joint kernel of a family of matrices, computed by
/// iterated restriction so the large stacked system is never materialized.
QMat joint_kernel(const std::vector<QMat>& mats, int ambient_dim);

/// Incremental echelon span of row vectors. With tracking enabled, a
/// dependent insert reports the coordinates over the previously accepted rows.
class RowSpan {
 public:
  explicit RowSpan(int width, bool track = false) : width_(width), track_(track) {}

  struct InsertResult {
    bool added;
    QVec coords;  // only filled in track mode when !added
  };

  InsertResult insert(QVec v);
  bool contains(QVec v) const;
  int dim() const { return int(rows_.size()); }
  int width() const { return width_; }
  const std::vector<QVec>& rows() const { return rows_; }

  /// Coordinates of v over the accepted rows, or nullopt if v is outside.
  std::optional<QVec> coords_of(QVec v) const;

 private:
  int width_;
  bool track_;
  std::vector<QVec> rows_;     // echelon, pivot normalized to 1
  std::vector<int> pivot_;     // pivot column per row
  std::vector<QVec> history_;  // row expressed over accepted originals
};

}  // namespace lieq
