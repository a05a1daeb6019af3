#include "nabt/smith.hpp"

#include <algorithm>
#include <sstream>

#include "nabt/errors.hpp"

namespace nabt {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long long>& row_major)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (row_major.size() != rows * cols) throw InvalidArgument("matrix entry count mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = row_major[i];
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  BigInt* d = &data_[dst * cols_];
  const BigInt* s = &data_[src * cols_];
  for (std::size_t c = 0; c < cols_; ++c)
    if (s[c] != 0) d[c] += factor * s[c];
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const BigInt& s = (*this)(r, src);
    if (s != 0) (*this)(r, dst) += factor * s;
  }
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c);
    out << ']';
  }
  out << ']';
  return out.str();
}

namespace {

struct NoTransforms {
  void swap_rows(std::size_t, std::size_t) {}
  void swap_cols(std::size_t, std::size_t) {}
  void add_row(std::size_t, std::size_t, const BigInt&) {}
  void add_col(std::size_t, std::size_t, const BigInt&) {}
  void negate_row(std::size_t) {}
};

struct Transforms {
  IntMatrix left;
  IntMatrix right;
  // Row operations on M are row operations on `left`; column operations
  // on M are column operations on `right`.
  void swap_rows(std::size_t a, std::size_t b) { left.swap_rows(a, b); }
  void swap_cols(std::size_t a, std::size_t b) { right.swap_cols(a, b); }
  void add_row(std::size_t d, std::size_t s, const BigInt& f) { left.add_row(d, s, f); }
  void add_col(std::size_t d, std::size_t s, const BigInt& f) { right.add_col(d, s, f); }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < left.cols(); ++c) left(r, c) = -left(r, c);
  }
};

template <typename Track>
std::vector<BigInt> reduce(IntMatrix& a, Track& track, bool enforce_chain) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t n = std::min(rows, cols);
  std::vector<BigInt> diag(n);

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    track.swap_rows(x, y);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    track.swap_cols(x, y);
  };

  for (std::size_t t = 0; t < n; ++t) {
    // Least nonzero |entry| in the trailing block.
    std::size_t pr = rows, pc = cols;
    BigInt best;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        const BigInt& v = a(r, c);
        if (v == 0) continue;
        BigInt av = abs(v);
        if (pr == rows || av < best) {
          best = av;
          pr = r;
          pc = c;
          if (best == 1) goto found;
        }
      }
  found:
    if (pr == rows) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        BigInt q = a(r, t) / a(t, t);
        a.add_row(r, t, -q);
        track.add_row(r, t, -q);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        BigInt q = a(t, c) / a(t, t);
        a.add_col(c, t, -q);
        track.add_col(c, t, -q);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) {
        // Remainders are smaller than the pivot; move the least one in.
        std::size_t br = t, bc = t;
        BigInt b = abs(a(t, t));
        for (std::size_t r = t + 1; r < rows; ++r)
          if (a(r, t) != 0 && abs(a(r, t)) < b) {
            b = abs(a(r, t));
            br = r;
            bc = t;
          }
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(t, c) != 0 && abs(a(t, c)) < b) {
            b = abs(a(t, c));
            br = t;
            bc = c;
          }
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      if (enforce_chain && abs(a(t, t)) != 1) {
        std::size_t bad = rows;
        for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
          for (std::size_t c = t + 1; c < cols; ++c)
            if (a(r, c) % a(t, t) != 0) {
              bad = r;
              break;
            }
        if (bad != rows) {
          a.add_row(t, bad, 1);
          track.add_row(t, bad, 1);
          continue;
        }
      }
      break;
    }
    if (a(t, t) < 0) {
      for (std::size_t c = t; c < cols; ++c) a(t, c) = -a(t, c);
      track.negate_row(t);
    }
    diag[t] = a(t, t);
  }
  return diag;
}

// Rewrites a diagonal into divisibility-chain form with the same cokernel.
void normalize_chain(std::vector<BigInt>& d) {
  std::stable_partition(d.begin(), d.end(), [](const BigInt& x) { return x != 0; });
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) break;
    for (std::size_t j = i + 1; j < d.size() && d[j] != 0; ++j) {
      BigInt g = gcd(d[i], d[j]);
      BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  Transforms track{IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  auto diag = reduce(a, track, true);
  return SmithForm{std::move(diag), std::move(track.left), std::move(track.right)};
}

std::vector<BigInt> smith_diagonal(IntMatrix m) {
  NoTransforms none;
  auto diag = reduce(m, none, false);
  normalize_chain(diag);
  return diag;
}

IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols, const std::vector<BigInt>& diagonal) {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diagonal.size() && i < rows && i < cols; ++i) d(i, i) = diagonal[i];
  return d;
}

BigInt determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  // Fraction-free Bareiss elimination.
  const std::size_t n = m.rows();
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return n == 0 ? BigInt(1) : sign * m(n - 1, n - 1);
}

bool verify_smith_form(const IntMatrix& m, const SmithForm& s) {
  if (s.left.rows() != m.rows() || s.right.cols() != m.cols()) return false;
  if (s.left * m * s.right != diagonal_matrix(m.rows(), m.cols(), s.diagonal)) return false;
  for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
    if (s.diagonal[i] < 0) return false;
    if (s.diagonal[i] == 0) {
      if (s.diagonal[i + 1] != 0) return false;
    } else if (s.diagonal[i + 1] % s.diagonal[i] != 0) {
      return false;
    }
  }
  return abs(determinant(s.left)) == 1 && abs(determinant(s.right)) == 1;
}

}  // namespace nabt
