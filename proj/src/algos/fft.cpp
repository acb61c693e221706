#include "xbench/fft.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "xbench/errors.hpp"

namespace xbench {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

ComplexVector dft_naive(const ComplexVector& x) {
  const std::size_t n = x.size();
  ComplexVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      // Reduce k*j mod n first so the angle stays small and exact in double.
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((k * j) % n) /
                           static_cast<double>(n);
      acc += x[j] * Complex(std::cos(angle), std::sin(angle));
    }
    out[k] = acc;
  }
  return out;
}

namespace {

ComplexVector fft_rec(const ComplexVector& x) {
  const std::size_t n = x.size();
  if (n == 1) return x;

  const std::size_t m = n / 2;
  ComplexVector even(m);
  ComplexVector odd(m);
  for (std::size_t i = 0; i < m; ++i) {
    even[i] = x[2 * i];
    odd[i] = x[2 * i + 1];
  }
  const ComplexVector top = fft_rec(even);
  const ComplexVector bottom = fft_rec(odd);

  ComplexVector y(n);
  for (std::size_t k = 0; k < m; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    const Complex z = Complex(std::cos(angle), std::sin(angle)) * bottom[k];
    y[k] = top[k] + z;
    y[k + m] = top[k] - z;
  }
  return y;
}

}  // namespace

ComplexVector fft_recursive(const ComplexVector& x) {
  if (!is_power_of_two(x.size())) {
    raise<DomainError>("fft_recursive: length " + std::to_string(x.size()) +
                       " is not a power of two");
  }
  return fft_rec(x);
}

ComplexVector ifft_recursive(const ComplexVector& spectrum) {
  ComplexVector conj(spectrum.size());
  for (std::size_t i = 0; i < spectrum.size(); ++i) conj[i] = std::conj(spectrum[i]);
  ComplexVector out = fft_recursive(conj);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (auto& v : out) v = std::conj(v) * scale;
  return out;
}

Complex evaluate_exponential_polynomial(const ComplexVector& coefficients, double t) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const double angle = static_cast<double>(k) * t;
    acc += coefficients[k] * Complex(std::cos(angle), std::sin(angle));
  }
  return acc;
}

}  // namespace xbench
