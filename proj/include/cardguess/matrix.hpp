#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cardguess {

// Dense square matrix with 1-based accessors. Positions and card labels
// are 1..n throughout the public API.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;

  explicit SquareMatrix(int n, const T& fill = T())
      : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {
    if (n < 0) throw std::domain_error("matrix size must be non-negative");
  }

  static SquareMatrix identity(int n) {
    SquareMatrix m(n, T(0));
    for (int i = 1; i <= n; ++i) m.entry(i, i) = T(1);
    return m;
  }

  int size() const { return n_; }

  T& entry(int i, int j) {
    check(i, j);
    return cells_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
  }

  const T& entry(int i, int j) const {
    check(i, j);
    return cells_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
  }

  std::vector<T> row(int i) const {
    check(i, 1);
    auto first = cells_.begin() + static_cast<std::size_t>(i - 1) * n_;
    return std::vector<T>(first, first + n_);
  }

  // this * rhs, entries accumulated in ascending inner index so Float64
  // results are identical run to run.
  SquareMatrix times(const SquareMatrix& rhs) const {
    if (rhs.n_ != n_) throw std::domain_error("matrix size mismatch");
    SquareMatrix out(n_, T(0));
    for (int i = 1; i <= n_; ++i) {
      for (int s = 1; s <= n_; ++s) {
        const T& a = entry(i, s);
        for (int j = 1; j <= n_; ++j) {
          out.entry(i, j) += a * rhs.entry(s, j);
        }
      }
    }
    return out;
  }

  bool operator==(const SquareMatrix&) const = default;

 private:
  void check(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
      throw std::domain_error("matrix index out of range");
    }
  }

  int n_ = 0;
  std::vector<T> cells_;
};

}  // namespace cardguess
