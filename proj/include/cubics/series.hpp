#pragma once

#include <vector>

#include "cubics/errors.hpp"

namespace cubics {

/// Truncated power series in the symmetric-power variable t with
/// coefficients in an arbitrary commutative ring R (operator+=, operator*,
/// default construction = zero). Index = power of t.
template <class R>
using TruncSeries = std::vector<R>;

template <class R>
TruncSeries<R> series_mul(const TruncSeries<R>& a, const TruncSeries<R>& b, int n) {
  TruncSeries<R> out(n + 1);
  for (int i = 0; i < static_cast<int>(a.size()) && i <= n; ++i)
    for (int j = 0; j < static_cast<int>(b.size()) && i + j <= n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Inverse of a series with constant term 1 (the constant term is reused as
/// the ring unit).
template <class R>
TruncSeries<R> series_inverse(const TruncSeries<R>& a, int n) {
  TruncSeries<R> out(n + 1);
  out[0] = a[0];
  for (int k = 1; k <= n; ++k) {
    R acc{};
    for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i) acc += a[i] * out[k - i];
    out[k] = R{} - acc;
  }
  return out;
}

template <class R>
TruncSeries<R> series_pow(const TruncSeries<R>& a, long e, int n) {
  TruncSeries<R> base = e >= 0 ? a : series_inverse(a, n);
  if (e < 0) e = -e;
  TruncSeries<R> out(n + 1);
  out[0] = a[0];  // ring unit
  while (e > 0) {
    if (e & 1) out = series_mul(out, base, n);
    base = series_mul(base, base, n);
    e >>= 1;
  }
  return out;
}

}  // namespace cubics
