#ifndef BREMIT_ESTIMATORS_HPP
#define BREMIT_ESTIMATORS_HPP

#include "bremit/trajectory.hpp"

namespace bremit {

/// Welch-averaged periodogram. segment_length must be a power of two and
/// leave at least 8 segments at the given overlap. Normalized so that the
/// estimate converges to S with C(0) = (1/pi) * integral_0^{pi/dt} S domega.
PsdEstimate estimate_psd(const Trajectory& traj, std::size_t segment_length,
                         WindowKind window, double overlap = 0.5);

/// Biased (1/N) autocorrelation estimate about the sample mean; entry 0 is
/// the sample variance. FFT-based; max_lag must be < length/4.
std::vector<double> estimate_autocorrelation(const Trajectory& traj, std::size_t max_lag);

/// Mean squared displacement <(x(t+lag) - x(t))^2> for lag = 0..max_lag,
/// FFT-accelerated. Intended for position trajectories.
std::vector<double> estimate_msd(const Trajectory& traj, std::size_t max_lag);

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace bremit

#endif
