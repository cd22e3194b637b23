#pragma once

#include "chered/cyclotomic.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace chered {

using CycVector = std::vector<Cyclotomic>;

/// Dense matrix over a cyclotomic field. Entries may sit at mixed conductors;
/// arithmetic coerces as needed.
class CycMatrix {
 public:
  CycMatrix() : rows_(0), cols_(0) {}
  CycMatrix(unsigned rows, unsigned cols);
  static CycMatrix identity(unsigned n);
  /// Row-major construction.
  static CycMatrix from_rows(const std::vector<CycVector>& rows);

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  const Cyclotomic& at(unsigned i, unsigned j) const { return a_[i * cols_ + j]; }
  Cyclotomic& at(unsigned i, unsigned j) { return a_[i * cols_ + j]; }

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix operator*(const Cyclotomic& s) const;
  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }

  CycVector apply(const CycVector& v) const;
  /// Row covector times matrix.
  CycVector apply_left(const CycVector& x) const;

  Cyclotomic det() const;
  unsigned rank() const;
  /// Basis of the right kernel { v : Mv = 0 }.
  std::vector<CycVector> kernel_basis() const;
  std::optional<CycMatrix> inverse() const;
  CycMatrix transpose() const;
  CycMatrix pow(unsigned long e) const;

  bool is_identity() const;
  std::size_t hash() const;
  std::string str() const;

 private:
  unsigned rows_, cols_;
  std::vector<Cyclotomic> a_;
};

/// Scales v so its first nonzero entry is 1; returns false when v = 0.
bool normalize_line(CycVector& v);

/// Kronecker pairing of a covector with a vector.
Cyclotomic pair(const CycVector& x, const CycVector& y);

std::string str(const CycVector& v);

}  // namespace chered
