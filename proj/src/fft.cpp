#include "bremit/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace bremit {

namespace {

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex plan_mutex;

std::vector<std::complex<double>> transform(const std::vector<std::complex<double>>& in,
                                            int sign) {
  std::vector<std::complex<double>> out(in.size());
  std::vector<std::complex<double>> work(in);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(in.size()),
                            reinterpret_cast<fftw_complex*>(work.data()),
                            reinterpret_cast<fftw_complex*>(out.data()), sign,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

std::vector<std::complex<double>> fft_forward(const std::vector<std::complex<double>>& in) {
  return transform(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> fft_inverse(const std::vector<std::complex<double>>& in) {
  return transform(in, FFTW_BACKWARD);
}

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace bremit
