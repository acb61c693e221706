#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace xbench {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Normalization convention shared by every transform here:
//   forward   H(k) = sum_j x(j) e^{-2 pi i k j / N}       (no 1/N)
//   inverse   x(j) = (1/N) sum_k H(k) e^{+2 pi i k j / N}
// so Parseval reads sum |H|^2 = N * sum |x|^2.

// Direct O(N^2) evaluation. Empty input yields empty output.
ComplexVector dft_naive(const ComplexVector& x);

// Radix-2 recursion: transform the even and odd halves, then combine with
// twiddles e^{-2 pi i k / n}. Throws DomainError unless N is a power of two.
ComplexVector fft_recursive(const ComplexVector& x);

// Inverse of fft_recursive, including the 1/N factor.
ComplexVector ifft_recursive(const ComplexVector& spectrum);

// Evaluates p(t) = sum_k c_k e^{i k t}. With c = spectrum / N, p(2 pi j / N)
// reproduces the j-th input sample.
Complex evaluate_exponential_polynomial(const ComplexVector& coefficients, double t);

bool is_power_of_two(std::size_t n) noexcept;

}  // namespace xbench
