#include "chered/matrix.hpp"

#include "chered/error.hpp"

#include <sstream>

namespace chered {

CycMatrix::CycMatrix(unsigned rows, unsigned cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

CycMatrix CycMatrix::identity(unsigned n) {
  CycMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
  return m;
}

CycMatrix CycMatrix::from_rows(const std::vector<CycVector>& rows) {
  if (rows.empty()) return CycMatrix();
  CycMatrix m(static_cast<unsigned>(rows.size()), static_cast<unsigned>(rows[0].size()));
  for (unsigned i = 0; i < m.rows_; ++i) {
    if (rows[i].size() != m.cols_) throw Error("matrix: ragged rows");
    for (unsigned j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix: shape mismatch in product");
  CycMatrix r(rows_, o.cols_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned k = 0; k < cols_; ++k) {
      const Cyclotomic& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (unsigned j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix: shape mismatch");
  CycMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix: shape mismatch");
  CycMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

CycMatrix CycMatrix::operator*(const Cyclotomic& s) const {
  CycMatrix r = *this;
  for (auto& e : r.a_) e *= s;
  return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

CycVector CycMatrix::apply(const CycVector& v) const {
  if (v.size() != cols_) throw Error("matrix: vector size mismatch");
  CycVector r(rows_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

CycVector CycMatrix::apply_left(const CycVector& x) const {
  if (x.size() != rows_) throw Error("matrix: covector size mismatch");
  CycVector r(cols_);
  for (unsigned i = 0; i < rows_; ++i) {
    if (x[i].is_zero()) continue;
    for (unsigned j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[j] += x[i] * at(i, j);
  }
  return r;
}

namespace {

// Row echelon form in place; returns pivot columns. Full rational pivoting is
// unnecessary, the first nonzero entry serves as pivot.
std::vector<unsigned> echelon(CycMatrix& m) {
  std::vector<unsigned> pivots;
  unsigned row = 0;
  for (unsigned col = 0; col < m.cols() && row < m.rows(); ++col) {
    unsigned p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (unsigned j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Cyclotomic inv = m.at(row, col).inverse();
    for (unsigned j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (unsigned i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Cyclotomic f = m.at(i, col);
      for (unsigned j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

unsigned CycMatrix::rank() const {
  CycMatrix m = *this;
  return static_cast<unsigned>(echelon(m).size());
}

std::vector<CycVector> CycMatrix::kernel_basis() const {
  CycMatrix m = *this;
  std::vector<unsigned> pivots = echelon(m);
  std::vector<bool> is_pivot(cols_, false);
  for (unsigned c : pivots) is_pivot[c] = true;
  std::vector<CycVector> basis;
  for (unsigned free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    CycVector v(cols_);
    v[free] = Cyclotomic(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(static_cast<unsigned>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Cyclotomic CycMatrix::det() const {
  if (rows_ != cols_) throw Error("matrix: determinant of non-square matrix");
  CycMatrix m = *this;
  Cyclotomic d(1);
  for (unsigned col = 0; col < cols_; ++col) {
    unsigned p = col;
    while (p < rows_ && m.at(p, col).is_zero()) ++p;
    if (p == rows_) return Cyclotomic(0);
    if (p != col) {
      for (unsigned j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Cyclotomic inv = m.at(col, col).inverse();
    for (unsigned i = col + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Cyclotomic f = m.at(i, col) * inv;
      for (unsigned j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

std::optional<CycMatrix> CycMatrix::inverse() const {
  if (rows_ != cols_) throw Error("matrix: inverse of non-square matrix");
  CycMatrix aug(rows_, 2 * cols_);
  for (unsigned i = 0; i < rows_; ++i) {
    for (unsigned j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Cyclotomic(1);
  }
  std::vector<unsigned> pivots = echelon(aug);
  if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
  CycMatrix inv(rows_, cols_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(cols_, rows_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

CycMatrix CycMatrix::pow(unsigned long e) const {
  if (rows_ != cols_) throw Error("matrix: power of non-square matrix");
  CycMatrix r = identity(rows_);
  CycMatrix base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool CycMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j) {
      if (i == j ? at(i, j) != Cyclotomic(1) : !at(i, j).is_zero()) return false;
    }
  return true;
}

std::size_t CycMatrix::hash() const {
  std::size_t h = hash_combine(rows_, cols_);
  for (const auto& e : a_) h = hash_combine(h, e.hash());
  return h;
}

std::string CycMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (unsigned i = 0; i < rows_; ++i) {
    if (i) os << " ; ";
    for (unsigned j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

bool normalize_line(CycVector& v) {
  for (const auto& e : v) {
    if (!e.is_zero()) {
      Cyclotomic inv = e.inverse();
      for (auto& x : v) x *= inv;
      return true;
    }
  }
  return false;
}

Cyclotomic pair(const CycVector& x, const CycVector& y) {
  if (x.size() != y.size()) throw Error("pair: size mismatch");
  Cyclotomic s(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
  return s;
}

std::string str(const CycVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

}  // namespace chered
