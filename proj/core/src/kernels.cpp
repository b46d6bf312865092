#include "vacfluct/kernels.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "vacfluct/errors.hpp"

namespace vacfluct {

namespace {

constexpr double kInvPi2 = 1.0 / (std::numbers::pi * std::numbers::pi);

// T^2 - 4z^2 factored so that it keeps full relative accuracy near the pole.
double light_cone_gap(double T, double z, double exclusion) {
  if (!(z > 0.0))
    throw DomainError("distance_z", "must be > 0");
  const double aT = std::fabs(T);
  const double d = aT - 2.0 * z;
  if (std::fabs(d) < exclusion * 2.0 * z)
    throw SingularPointError(T, "light-cone pole |T| = 2z");
  return d * (aT + 2.0 * z);
}

} // namespace

double kernel_zz(double T, double z, double exclusion) {
  const double g = light_cone_gap(T, z, exclusion);
  return kInvPi2 / (g * g);
}

double kernel_xx(double T, double z, double exclusion) {
  const double g = light_cone_gap(T, z, exclusion);
  return -kInvPi2 * (T * T + 4.0 * z * z) / (g * g * g);
}

std::complex<double> kernel_zz(std::complex<double> T, double z) {
  const std::complex<double> g = (T - 2.0 * z) * (T + 2.0 * z);
  return kInvPi2 / (g * g);
}

std::complex<double> kernel_xx(std::complex<double> T, double z) {
  const std::complex<double> g = (T - 2.0 * z) * (T + 2.0 * z);
  return -kInvPi2 * (T * T + 4.0 * z * z) / (g * g * g);
}

KernelHandle make_kernel_zz(double z, double exclusion) {
  if (!(z > 0.0))
    throw DomainError("distance_z", "must be > 0");
  KernelHandle k;
  k.name = "E_z E_z";
  k.evaluator = [z, exclusion](double T) { return kernel_zz(T, z, exclusion); };
  k.continuation = [z](std::complex<double> T) { return kernel_zz(T, z); };
  k.singular_points = {2.0 * z};
  k.decay_class = DecayClass::inverse_quartic;
  k.em = EmComponent::zz;
  k.distance_z = z;
  return k;
}

KernelHandle make_kernel_xx(double z, double exclusion) {
  if (!(z > 0.0))
    throw DomainError("distance_z", "must be > 0");
  KernelHandle k;
  k.name = "E_x E_x";
  k.evaluator = [z, exclusion](double T) { return kernel_xx(T, z, exclusion); };
  k.continuation = [z](std::complex<double> T) { return kernel_xx(T, z); };
  k.singular_points = {2.0 * z};
  k.decay_class = DecayClass::inverse_quartic;
  k.em = EmComponent::xx;
  k.distance_z = z;
  return k;
}

KernelHandle make_kernel(std::string name, std::function<double(double)> f,
                         DecayClass decay, std::vector<double> singular_points) {
  KernelHandle k;
  k.name = std::move(name);
  k.evaluator = std::move(f);
  k.decay_class = decay;
  k.singular_points = std::move(singular_points);
  return k;
}

} // namespace vacfluct
