#ifndef BREMIT_FFT_HPP
#define BREMIT_FFT_HPP

#include <complex>
#include <vector>

namespace bremit {

/// Thin FFTW wrappers (complex-to-complex, FFTW sign conventions:
/// forward = exp(-i w t), inverse unnormalized). Plans use FFTW_ESTIMATE so
/// results are bit-reproducible run to run.
std::vector<std::complex<double>> fft_forward(const std::vector<std::complex<double>>& in);
std::vector<std::complex<double>> fft_inverse(const std::vector<std::complex<double>>& in);

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
std::size_t next_power_of_two(std::size_t n);

}  // namespace bremit

#endif
