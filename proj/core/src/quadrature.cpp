#include "vacfluct/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "vacfluct/errors.hpp"

namespace vacfluct::numeric {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// QUADPACK qk21 abscissae and weights.
constexpr double xgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double wgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208608306994, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double wg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a, b;
  double value, error, abs_value;
  bool operator<(const Panel &o) const { return error < o.error; }
};

Panel gk21(const RealFunction &f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::fabs(half);

  double fv1[10], fv2[10];
  const double fc = f(center);
  double res_g = 0.0;
  double res_k = wgk[10] * fc;
  double res_abs = std::fabs(res_k);
  for (int j = 0; j < 5; ++j) {
    const int jt = 2 * j + 1;
    const double dx = half * xgk[jt];
    const double f1 = f(center - dx), f2 = f(center + dx);
    fv1[jt] = f1;
    fv2[jt] = f2;
    res_g += wg[j] * (f1 + f2);
    res_k += wgk[jt] * (f1 + f2);
    res_abs += wgk[jt] * (std::fabs(f1) + std::fabs(f2));
  }
  for (int j = 0; j < 5; ++j) {
    const int jt = 2 * j;
    const double dx = half * xgk[jt];
    const double f1 = f(center - dx), f2 = f(center + dx);
    fv1[jt] = f1;
    fv2[jt] = f2;
    res_k += wgk[jt] * (f1 + f2);
    res_abs += wgk[jt] * (std::fabs(f1) + std::fabs(f2));
  }

  const double mean = 0.5 * res_k;
  double res_asc = wgk[10] * std::fabs(fc - mean);
  for (int j = 0; j < 10; ++j)
    res_asc += wgk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));

  const double result = res_k * half;
  res_abs *= abs_half;
  res_asc *= abs_half;
  double err = std::fabs((res_k - res_g) * half);
  if (res_asc != 0.0 && err != 0.0)
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * kEps))
    err = std::max(50.0 * kEps * res_abs, err);
  return {a, b, result, err, res_abs};
}

bool splittable(const Panel &p) {
  const double scale = std::max({std::fabs(p.a), std::fabs(p.b),
                                 std::numeric_limits<double>::min()});
  return std::fabs(p.b - p.a) > 256.0 * kEps * scale;
}

} // namespace

Estimate try_integrate(const RealFunction &f, double a, double b,
                       const QuadratureSpec &spec,
                       std::span<const double> breaks) {
  Estimate out;
  if (a == b)
    return out;
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }

  std::vector<double> cuts{a};
  for (double x : breaks)
    if (x > a && x < b)
      cuts.push_back(x);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Panel> work;
  std::vector<Panel> frozen;
  double total = 0.0, total_err = 0.0, total_abs = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Panel p = gk21(f, cuts[i], cuts[i + 1]);
    out.evaluations += 21;
    total += p.value;
    total_err += p.error;
    total_abs += p.abs_value;
    work.push(p);
  }

  auto tolerance = [&] {
    return std::max({spec.abs_tol, spec.rel_tol * std::fabs(total),
                     50.0 * kEps * total_abs});
  };

  int splits = 0;
  while (total_err > tolerance() && !work.empty() &&
         splits < spec.max_subdivisions) {
    Panel worst = work.top();
    work.pop();
    if (!splittable(worst)) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk21(f, worst.a, mid);
    Panel right = gk21(f, mid, worst.b);
    out.evaluations += 42;
    ++splits;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    work.push(left);
    work.push(right);
  }

  // Re-sum from the panels to shed the drift of the running updates.
  total = 0.0;
  total_err = 0.0;
  for (const Panel &p : frozen) {
    total += p.value;
    total_err += p.error;
  }
  while (!work.empty()) {
    total += work.top().value;
    total_err += work.top().error;
    work.pop();
  }

  out.value = sign * total;
  out.error = total_err;
  out.converged = std::isfinite(total) && total_err <= tolerance();
  return out;
}

Estimate integrate(const RealFunction &f, double a, double b,
                   const QuadratureSpec &spec, std::span<const double> breaks) {
  Estimate e = try_integrate(f, a, b, spec, breaks);
  if (!e.converged)
    throw QuadratureError(e.value, e.error,
                          "adaptive Gauss-Kronrod did not converge on [" +
                              std::to_string(a) + ", " + std::to_string(b) +
                              "]");
  return e;
}

Estimate try_integrate_to_infinity(const RealFunction &f, double a,
                                   double first_panel, const QuadratureSpec &spec) {
  constexpr int kMaxPanels = 400;
  Estimate total;
  double lo = a;
  double width = first_panel > 0.0 ? first_panel : 1.0;
  int quiet = 0;
  bool finished = false;
  for (int k = 0; k < kMaxPanels; ++k) {
    const double hi = lo + width;
    Estimate panel = try_integrate(f, lo, hi, spec);
    total += panel;
    const double small =
        std::max(spec.abs_tol, spec.rel_tol * std::fabs(total.value));
    quiet = (std::fabs(panel.value) + panel.error <= small) ? quiet + 1 : 0;
    if (quiet >= 2) {
      finished = true;
      break;
    }
    lo = hi;
    width *= 2.0;
    if (!std::isfinite(lo))
      break;
  }
  // A panel that missed its own tolerance is acceptable when it is small
  // against the whole integral: only the summed error has to meet the target.
  const bool within =
      total.error <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(total.value));
  total.converged = finished && (total.converged || within);
  return total;
}

Estimate integrate_to_infinity(const RealFunction &f, double a,
                               double first_panel, const QuadratureSpec &spec) {
  const Estimate total = try_integrate_to_infinity(f, a, first_panel, spec);
  if (!total.converged)
    throw QuadratureError(total.value, total.error,
                          "semi-infinite integral did not converge");
  return total;
}

} // namespace vacfluct::numeric
