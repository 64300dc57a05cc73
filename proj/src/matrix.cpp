#include "assocform/matrix.hpp"

#include <utility>

#include "assocform/errors.hpp"

namespace assocform {

void Mat::append_row(const std::vector<Rat>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_)
    throw StructuralError("structural_error", "row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<Rat> Mat::row(int r) const {
  std::vector<Rat> out(static_cast<std::size_t>(cols_));
  for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(c)] = at(r, c);
  return out;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Mat Mat::operator*(const Mat& other) const {
  if (cols_ != other.rows_)
    throw StructuralError("structural_error", "matrix product shape mismatch");
  Mat out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      if (sgn(at(r, k)) == 0) continue;
      for (int c = 0; c < other.cols_; ++c) out.at(r, c) += at(r, k) * other.at(k, c);
    }
  return out;
}

bool Mat::operator==(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != other.at(r, c)) return false;
  return true;
}

namespace {

// Integer lift: each row scaled by the lcm of its denominators. Row scaling
// preserves both the row space and the kernel.
std::vector<std::vector<Int>> integer_lift(const Mat& m) {
  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) {
    Int lcm = 1;
    for (int c = 0; c < m.cols(); ++c) {
      const Rat& v = m.at(r, c);
      if (sgn(v) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    auto& row = rows[static_cast<std::size_t>(r)];
    row.resize(static_cast<std::size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) {
      const Rat& v = m.at(r, c);
      row[static_cast<std::size_t>(c)] = v.get_num() * (lcm / v.get_den());
    }
  }
  return rows;
}

Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    throw std::logic_error("fraction-free elimination: inexact division");
  return q;
}

}  // namespace

std::vector<int> rref_in_place(Mat& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<int> pivot_cols;
  if (rows == 0 || cols == 0) return pivot_cols;

  auto a = integer_lift(m);
  Int prev_pivot = 1;
  int pivot_row = 0;
  for (int c = 0; c < cols && pivot_row < rows; ++c) {
    int sel = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a[static_cast<std::size_t>(sel)], a[static_cast<std::size_t>(pivot_row)]);
    const auto& prow = a[static_cast<std::size_t>(pivot_row)];
    const Int pivot = prow[static_cast<std::size_t>(c)];
    for (int r = pivot_row + 1; r < rows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const Int factor = row[static_cast<std::size_t>(c)];
      for (int j = c; j < cols; ++j) {
        row[static_cast<std::size_t>(j)] =
            exact_div(row[static_cast<std::size_t>(j)] * pivot -
                          factor * prow[static_cast<std::size_t>(j)],
                      prev_pivot);
      }
    }
    prev_pivot = pivot;
    pivot_cols.push_back(c);
    ++pivot_row;
  }

  // Normalize pivots to 1 and eliminate above, in rational arithmetic.
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      m.at(r, c) = Rat(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      m.at(r, c).canonicalize();
    }
  for (int k = static_cast<int>(pivot_cols.size()) - 1; k >= 0; --k) {
    const int pc = pivot_cols[static_cast<std::size_t>(k)];
    const Rat pivot = m.at(k, pc);
    for (int c = pc; c < cols; ++c) m.at(k, c) /= pivot;
    for (int r = 0; r < k; ++r) {
      const Rat factor = m.at(r, pc);
      if (sgn(factor) == 0) continue;
      for (int c = pc; c < cols; ++c) {
        m.at(r, c) -= factor * m.at(k, c);
        m.at(r, c).canonicalize();
      }
    }
  }
  return pivot_cols;
}

int rank_of(Mat m) { return static_cast<int>(rref_in_place(m).size()); }

Mat row_space(Mat m) {
  const auto pivots = rref_in_place(m);
  Mat out(static_cast<int>(pivots.size()), m.cols());
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c);
  return out;
}

Mat null_space(const Mat& m) {
  const int cols = m.cols();
  Mat work = m;
  const auto pivots = rref_in_place(work);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  Mat basis(0, cols);
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rat> v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(f)] = 1;
    for (int k = 0; k < static_cast<int>(pivots.size()); ++k)
      v[static_cast<std::size_t>(pivots[static_cast<std::size_t>(k)])] = -work.at(k, f);
    basis.append_row(v);
  }
  return row_space(std::move(basis));
}

std::vector<Rat> reduce_against_rref(const Mat& rref, std::vector<Rat> v) {
  if (static_cast<int>(v.size()) != rref.cols())
    throw StructuralError("structural_error", "vector length mismatch");
  for (int r = 0; r < rref.rows(); ++r) {
    int lead = -1;
    for (int c = 0; c < rref.cols(); ++c)
      if (sgn(rref.at(r, c)) != 0) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    const Rat factor = v[static_cast<std::size_t>(lead)];
    if (sgn(factor) == 0) continue;
    for (int c = lead; c < rref.cols(); ++c) {
      v[static_cast<std::size_t>(c)] -= factor * rref.at(r, c);
      v[static_cast<std::size_t>(c)].canonicalize();
    }
  }
  return v;
}

bool in_row_space(const Mat& rref, const std::vector<Rat>& v) {
  for (const Rat& r : reduce_against_rref(rref, v))
    if (sgn(r) != 0) return false;
  return true;
}

Rat determinant(Mat m) {
  if (m.rows() != m.cols())
    throw StructuralError("structural_error", "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Rat(1);

  auto a = integer_lift(m);
  // Per-row scaling factors of the lift divide the determinant back out.
  Rat scale = 1;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (sgn(m.at(r, c)) != 0) {
        scale *= Rat(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) / m.at(r, c);
        break;
      }
    }
  }
  int sign = 1;
  Int prev_pivot = 1;
  for (int k = 0; k < n; ++k) {
    int sel = -1;
    for (int r = k; r < n; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) return Rat(0);
    if (sel != k) {
      std::swap(a[static_cast<std::size_t>(sel)], a[static_cast<std::size_t>(k)]);
      sign = -sign;
    }
    const Int pivot = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            exact_div(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * pivot -
                          a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] *
                              a[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)],
                      prev_pivot);
      }
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = 0;
    }
    prev_pivot = pivot;
  }
  Rat det(a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)]);
  det *= sign;
  det /= scale;
  det.canonicalize();
  return det;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols())
    throw StructuralError("structural_error", "inverse of non-square matrix");
  const int n = m.rows();
  Mat aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  const auto pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
    throw StructuralError("singular_matrix", "matrix is not invertible");
  Mat out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
  return out;
}

}  // namespace assocform
