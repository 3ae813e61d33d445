#pragma once

#include <vector>

#include "cubics/errors.hpp"
#include "cubics/lpoly.hpp"
#include "cubics/numeric.hpp"

namespace cubics {

namespace detail {

inline Int exact_quotient(const Int& a, const Int& b) {
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw InexactDivision("exact_quotient: nonzero remainder");
  return q;
}

inline LPoly exact_quotient(const LPoly& a, const LPoly& b) { return div_exact(a, b); }

inline bool scalar_is_zero(const Int& a) { return a == 0; }
inline bool scalar_is_zero(const LPoly& a) { return a.is_zero(); }

}  // namespace detail

template <class Scalar>
struct KernelResult {
  int rank = 0;
  /// Kernel basis vectors with entries in the coefficient domain,
  /// one per non-pivot column, in column order. Deterministic.
  std::vector<Vec<Scalar>> basis;
};

/// Nullspace of a matrix over an integral domain (exact arithmetic) by
/// one-step fraction-free Gauss-Jordan elimination. Pivoting is
/// deterministic: columns left to right, first usable row.
template <class Scalar>
KernelResult<Scalar> kernel_bareiss(Mat<Scalar> a) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  KernelResult<Scalar> out;

  std::vector<int> pivot_row_of_col(n, -1);
  std::vector<bool> row_used(m, false);
  Scalar prev = Scalar(1);

  for (int col = 0; col < n; ++col) {
    int pr = -1;
    for (int i = 0; i < m; ++i) {
      if (!row_used[i] && !detail::scalar_is_zero(a(i, col))) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    row_used[pr] = true;
    pivot_row_of_col[col] = pr;
    const Scalar piv = a(pr, col);
    for (int i = 0; i < m; ++i) {
      if (i == pr) continue;
      const Scalar f = a(i, col);
      for (int j = 0; j < n; ++j)
        a(i, j) = detail::exact_quotient(piv * a(i, j) - f * a(pr, j), prev);
    }
    prev = piv;
    ++out.rank;
  }

  // after the Jordan sweep every pivot entry equals the last pivot `prev`
  for (int f = 0; f < n; ++f) {
    if (pivot_row_of_col[f] >= 0) continue;
    Vec<Scalar> x = Vec<Scalar>::Constant(n, Scalar(0));
    x(f) = prev;
    for (int c = 0; c < n; ++c)
      if (pivot_row_of_col[c] >= 0) x(c) = Scalar(0) - a(pivot_row_of_col[c], f);
    out.basis.push_back(std::move(x));
  }
  return out;
}

}  // namespace cubics
