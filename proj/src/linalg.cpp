#include "lieq/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace lieq {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return QMat(0, 0);
  QMat m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    assert(rows[i].size() == rows[0].size());
    m.set_row(i, rows[i]);
  }
  return m;
}

QVec QMat::row(int i) const {
  QVec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void QMat::set_row(int i, const QVec& v) {
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

QMat QMat::operator*(const QMat& o) const {
  assert(cols_ == o.rows_);
  QMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& y = o.at(k, j);
        if (y != 0) r.at(i, j) += x * y;
      }
    }
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

QMat QMat::scaled(const Rat& c) const {
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
  return r;
}

QVec QMat::apply(const QVec& x) const {
  assert(int(x.size()) == cols_);
  QVec y(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rat s = 0;
    for (int j = 0; j < cols_; ++j) {
      const Rat& m = at(i, j);
      if (m != 0 && x[j] != 0) s += m * x[j];
    }
    y[i] = s;
  }
  return y;
}

QMat QMat::transpose() const {
  QMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rat QMat::trace() const {
  assert(rows_ == cols_);
  Rat s = 0;
  for (int i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

bool QMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Rat QMat::trace_of_product(const QMat& A, const QMat& B) {
  assert(A.cols() == B.rows() && A.rows() == B.cols());
  Rat s = 0;
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      const Rat& x = A.at(i, k);
      if (x != 0 && B.at(k, i) != 0) s += x * B.at(k, i);
    }
  return s;
}

int rref(QMat& m, std::vector<int>* pivots) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
    Rat inv = 1 / m.at(rank, col);
    for (int j = col; j < m.cols(); ++j) m.at(rank, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank) continue;
      const Rat f = m.at(i, col);
      if (f == 0) continue;
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

int rank_of(QMat m) { return rref(m); }

QMat kernel_basis(const QMat& m_in) {
  QMat m = m_in;
  std::vector<int> pivots;
  int rank = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  QMat basis(m.cols() - rank, m.cols());
  int r = 0;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.at(r, free_col) = 1;
    for (int i = 0; i < rank; ++i) basis.at(r, pivots[i]) = -m.at(i, free_col);
    ++r;
  }
  return basis;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
  assert(int(b.size()) == a.rows());
  QMat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots;
  rref(aug, &pivots);
  for (int c : pivots)
    if (c == a.cols()) return std::nullopt;  // inconsistent
  QVec x(a.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(int(i), a.cols());
  return x;
}

QMat joint_kernel(const std::vector<QMat>& mats, int ambient_dim) {
  QMat basis = QMat::identity(ambient_dim);
  for (const auto& m : mats) {
    if (basis.rows() == 0) break;
    assert(m.cols() == ambient_dim);
    // restrict m to the current subspace: S = m * basis^T, kernel in coords
    QMat s(m.rows(), basis.rows());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < basis.rows(); ++j) {
        Rat acc = 0;
        for (int k = 0; k < ambient_dim; ++k) {
          const Rat& x = m.at(i, k);
          if (x != 0 && basis.at(j, k) != 0) acc += x * basis.at(j, k);
        }
        s.at(i, j) = acc;
      }
    QMat coords = kernel_basis(s);
    basis = coords * basis;
  }
  // canonicalize
  rref(basis);
  return basis;
}

RowSpan::InsertResult RowSpan::insert(QVec v) {
  assert(int(v.size()) == width_);
  QVec coeff(track_ ? rows_.size() : 0, Rat(0));
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rat& x = v[pivot_[k]];
    if (x == 0) continue;
    Rat f = x;  // rows are pivot-normalized
    add_scaled(v, -f, rows_[k]);
    if (track_) add_scaled(coeff, f, history_[k]);
  }
  int p = -1;
  for (int j = 0; j < width_; ++j)
    if (v[j] != 0) {
      p = j;
      break;
    }
  if (p < 0) return {false, coeff};

  Rat inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  if (track_) {
    // new accepted original a_m: row = inv*(original - sum f_k rows_k)
    QVec h(rows_.size() + 1, Rat(0));
    for (size_t k = 0; k < coeff.size(); ++k) h[k] = -inv * coeff[k];
    h[rows_.size()] = inv;
    // history entries are over accepted originals; pad older ones lazily
    for (auto& old : history_) old.resize(rows_.size() + 1, Rat(0));
    history_.push_back(std::move(h));
  }
  rows_.push_back(std::move(v));
  pivot_.push_back(p);
  return {true, {}};
}

bool RowSpan::contains(QVec v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rat& x = v[pivot_[k]];
    if (x == 0) continue;
    add_scaled(v, -x, rows_[k]);
  }
  return is_zero_vec(v);
}

std::optional<QVec> RowSpan::coords_of(QVec v) const {
  assert(track_);
  QVec coeff(rows_.size(), Rat(0));
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rat& x = v[pivot_[k]];
    if (x == 0) continue;
    Rat f = x;
    add_scaled(v, -f, rows_[k]);
    QVec h = history_[k];
    h.resize(rows_.size(), Rat(0));
    add_scaled(coeff, f, h);
  }
  if (!is_zero_vec(v)) return std::nullopt;
  return coeff;
}

}  // namespace lieq
