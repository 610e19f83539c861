#include "flagcurves/rational.hpp"

namespace flagcurves {

std::optional<Integer> integer_cbrt(const Integer& n) {
  if (n < 0) {
    auto r = integer_cbrt(-n);
    if (!r) return std::nullopt;
    return -*r;
  }
  if (n == 0) return Integer(0);
  // Binary search for the cube root.
  Integer lo = 0, hi = 1;
  while (hi * hi * hi < n) hi <<= 1;
  while (lo < hi) {
    Integer mid = (lo + hi) >> 1;
    if (mid * mid * mid < n)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo * lo * lo == n) return lo;
  return std::nullopt;
}

std::optional<Rational> rational_cbrt(const Rational& v) {
  auto n = integer_cbrt(v.num());
  if (!n) return std::nullopt;
  auto d = integer_cbrt(v.den());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace flagcurves
