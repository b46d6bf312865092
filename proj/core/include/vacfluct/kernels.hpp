#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vacfluct {

// Renormalised equal-point electric-field correlators near a perfectly
// reflecting plane at distance z, as functions of the time difference T.
//
//   <E_z E_z>_R(T) =  1 / (pi^2 (T^2 - 4z^2)^2)
//   <E_x E_x>_R(T) = -(T^2 + 4z^2) / (pi^2 (T^2 - 4z^2)^3)   (= <E_y E_y>_R)
//
// Both have their light-cone pole at |T| = 2z.  Evaluation is refused inside
// the band ||T| - 2z| < exclusion * 2z.

inline constexpr double kDefaultKernelExclusion = 1e-12;

double kernel_zz(double T, double z, double exclusion = kDefaultKernelExclusion);
double kernel_xx(double T, double z, double exclusion = kDefaultKernelExclusion);

// Analytic continuations, used for contour-shifted smearing integrals.
std::complex<double> kernel_zz(std::complex<double> T, double z);
std::complex<double> kernel_xx(std::complex<double> T, double z);

enum class DecayClass { inverse_quartic, regular_decaying, non_decaying };
enum class EmComponent { zz, xx };

// An even kernel of the time difference together with what the integrators
// need to know about it.
struct KernelHandle {
  std::string name;
  std::function<double(double)> evaluator;
  std::vector<double> singular_points; // |T| values
  DecayClass decay_class = DecayClass::regular_decaying;
  // Set only for kernels that are real-analytic off the real poles.
  std::function<std::complex<double>(std::complex<double>)> continuation;
  // Set for the electromagnetic correlators; enables the regularised
  // closed-form route of the measuring-part integral.
  std::optional<EmComponent> em;
  double distance_z = 0.0;

  double operator()(double T) const { return evaluator(T); }
  bool is_singular() const { return !singular_points.empty(); }
};

KernelHandle make_kernel_zz(double z, double exclusion = kDefaultKernelExclusion);
KernelHandle make_kernel_xx(double z, double exclusion = kDefaultKernelExclusion);
KernelHandle make_kernel(std::string name, std::function<double(double)> f,
                         DecayClass decay,
                         std::vector<double> singular_points = {});

} // namespace vacfluct
