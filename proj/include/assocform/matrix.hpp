#pragma once

#include <vector>

#include "assocform/rational.hpp"

namespace assocform {

// Dense matrix of exact rationals. Small dimensions throughout (graded pieces
// at desk scale), so no sparsity tricks.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return data_[idx(r, c)]; }
  const Rat& at(int r, int c) const { return data_[idx(r, c)]; }

  void append_row(const std::vector<Rat>& row);
  std::vector<Rat> row(int r) const;

  static Mat identity(int n);
  Mat transposed() const;
  Mat operator*(const Mat& other) const;
  bool operator==(const Mat& other) const;
  bool operator!=(const Mat& other) const { return !(*this == other); }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_;
  int cols_;
  std::vector<Rat> data_;
};

// Reduced row echelon form, in place. Fraction-free (Bareiss) forward
// elimination on an integer lift of each row, then normalization to leading
// entries 1 and elimination above the pivots. Pivoting is deterministic
// (first nonzero row per column), and the result is the unique RREF of the
// row space. Returns the pivot columns.
std::vector<int> rref_in_place(Mat& m);

int rank_of(Mat m);

// RREF with zero rows dropped: the canonical basis matrix of the row space.
Mat row_space(Mat m);

// Canonical (RREF) basis of {x : m x = 0}, one solution per row.
Mat null_space(const Mat& m);

// Reduces v against an RREF matrix; returns the residual. v is a member of
// the row space iff the residual is zero.
std::vector<Rat> reduce_against_rref(const Mat& rref, std::vector<Rat> v);
bool in_row_space(const Mat& rref, const std::vector<Rat>& v);

Rat determinant(Mat m);
Mat inverse(const Mat& m);  // throws StructuralError on singular input

}  // namespace assocform
