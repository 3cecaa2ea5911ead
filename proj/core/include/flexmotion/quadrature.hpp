#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace flexmotion {

/// Number of composite Simpson intervals covering [a, b] with spacing no
/// larger than `step`; always even and at least 2.
inline std::size_t simpson_intervals(double a, double b, double step) {
  if (!(step > 0.0) || !(b > a)) {
    throw std::invalid_argument("simpson_intervals: need step > 0 and b > a");
  }
  auto n = static_cast<std::size_t>(std::ceil((b - a) / step - 1e-9));
  if (n < 2) n = 2;
  if (n % 2 != 0) ++n;
  return n;
}

/// Composite Simpson rule for a smooth integrand on [a, b].
template <typename F>
double simpson(F&& f, double a, double b, double step) {
  const std::size_t n = simpson_intervals(a, b, step);
  const double h = (b - a) / static_cast<double>(n);
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double t = a + static_cast<double>(i) * h;
    if (i % 2 == 1) {
      odd += f(t);
    } else {
      even += f(t);
    }
  }
  return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

}  // namespace flexmotion
