#include "vacfluct/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>
#include <vector>

#include "vacfluct/errors.hpp"
#include "vacfluct/philox.hpp"

namespace vacfluct {

namespace {

int power_of(IntegralOrder order) { return order == IntegralOrder::quadratic ? 2 : 3; }

void check_alpha_sigma(int alpha, double sigma) {
  if (alpha != 0 && alpha != 1)
    throw DomainError("alpha", "must be 0 or 1");
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw DomainError("sigma", "must be a finite positive number");
}

// A piece of the time axis together with its map from the integration
// variable and the constant Jacobian-times-F weight.
struct Segment {
  double lo, hi;
  double weight;
  double origin; // +/- tau/2 for tails, unused for the plateau
  double scale;  // +/- mu tau for tails, 0 marks the plateau
  double time(double u) const { return scale == 0.0 ? u : origin + scale * std::tan(u); }
};

std::vector<Segment> segments_of(const LorentzPlateau &F) {
  const double h = 0.5 * F.tau;
  std::vector<Segment> s{{-h, h, 1.0, 0.0, 0.0}};
  if (F.mu > 0.0) {
    const double mt = F.mu * F.tau;
    const double quarter = 0.5 * std::numbers::pi;
    s.push_back({0.0, quarter, mt, h, mt});
    s.push_back({0.0, quarter, mt, -h, -mt});
  }
  return s;
}

struct ChunkStats {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;
};

// Chan et al. pairwise update.
void merge(ChunkStats &into, const ChunkStats &other) {
  if (other.n == 0)
    return;
  const double na = static_cast<double>(into.n), nb = static_cast<double>(other.n);
  const double n = na + nb;
  const double delta = other.mean - into.mean;
  into.mean += delta * nb / n;
  into.m2 += other.m2 + delta * delta * na * nb / n;
  into.n += other.n;
}

constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;

} // namespace

OracleReport make_oracle_report(std::string target_name, double closed_form_value,
                                const Estimate &oracle_value) {
  OracleReport r;
  r.target_name = std::move(target_name);
  r.closed_form_value = closed_form_value;
  r.oracle_value = oracle_value.value;
  const double diff = std::fabs(closed_form_value - oracle_value.value);
  r.rel_deviation =
      oracle_value.value == 0.0 ? diff : diff / std::fabs(oracle_value.value);
  r.nodes_used = oracle_value.evaluations;
  return r;
}

Estimate j_vertical_oracle(double nu, int alpha, double sigma, IntegralOrder order,
                           const QuadratureSpec &quad) {
  check_alpha_sigma(alpha, sigma);
  if (std::fabs(nu) == sigma)
    throw SingularPointError(nu, "vertical line starts on a pole");
  const int p = power_of(order);
  RealFunction f = [=](double t) {
    const std::complex<double> w(nu, t);
    const std::complex<double> den = std::pow(w * w - sigma * sigma, p);
    return -((1.0 - static_cast<double>(alpha) * w) / den).imag();
  };
  // The integrand varies on the scale of the distance to the nearest pole.
  const double gap = std::fabs(std::fabs(nu) - sigma);
  const double first = std::clamp(gap, 1e-6, 1.0);
  return numeric::integrate_to_infinity(f, 0.0, first, quad);
}

Estimate direct_interval_oracle(double nu, int alpha, double sigma, IntegralOrder order,
                                const QuadratureSpec &quad) {
  check_alpha_sigma(alpha, sigma);
  for (double pole : {-sigma, sigma})
    if (pole >= nu && pole <= nu + 1.0)
      throw SingularPointError(pole, "pole inside the integration interval");
  const int p = power_of(order);
  RealFunction f = [=](double u) {
    const double d = (u - sigma) * (u + sigma);
    return (1.0 - alpha * u) / std::pow(d, p);
  };
  return numeric::integrate(f, nu, nu + 1.0, quad);
}

Estimate double_integral_oracle(const KernelHandle &K, const LorentzPlateau &F,
                                double nu, const QuadratureSpec &quad) {
  F.validate();
  if (K.is_singular())
    throw SingularPointError(K.singular_points.front(),
                             "double-integral oracle needs a regular kernel");
  QuadratureSpec inner_quad = quad;
  inner_quad.rel_tol = std::max(0.1 * quad.rel_tol, 1e-14);
  inner_quad.abs_tol = 0.1 * quad.abs_tol;

  const double shift = F.tau * nu;
  const std::vector<Segment> segs = segments_of(F);
  Estimate total;
  for (const Segment &outer : segs) {
    for (const Segment &inner : segs) {
      RealFunction outer_fn = [&](double u) {
        const double t1 = outer.time(u);
        RealFunction inner_fn = [&](double v) { return K(t1 - inner.time(v) + shift); };
        // On the plateau the kernel peaks where t'' = t' + tau nu.
        double brk[1];
        std::span<const double> breaks;
        const double peak = t1 + shift;
        if (inner.scale == 0.0 && peak > inner.lo && peak < inner.hi) {
          brk[0] = peak;
          breaks = brk;
        }
        return numeric::integrate(inner_fn, inner.lo, inner.hi, inner_quad, breaks).value *
               inner.weight;
      };
      total += numeric::integrate(outer_fn, outer.lo, outer.hi, quad).scaled(outer.weight);
    }
  }
  return total;
}

namespace {

// D(x) = int_0^x exp(t^2 - x^2) dt = int_0^|x| exp(-s (2|x| - s)) ds.  For
// large |x| all the weight sits within a few 1/|x| of s = 0, narrower than
// the first Kronrod panel can see, so breaks are placed on that scale.
Estimate dawson(double x, const QuadratureSpec &quad) {
  if (x == 0.0)
    return {};
  const double a = std::fabs(x);
  std::vector<double> breaks;
  for (double k : {0.25, 1.0, 4.0, 16.0, 64.0})
    if (k / a < a)
      breaks.push_back(k / a);
  Estimate e = numeric::integrate([a](double s) { return std::exp(-s * (2.0 * a - s)); }, 0.0,
                                  a, quad, breaks);
  return x < 0 ? e.scaled(-1.0) : e;
}

} // namespace

Estimate w_bracket_pole_split_oracle(double sigma, double beta, const QuadratureSpec &quad) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw DomainError("sigma", "must be a finite positive number");
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw DomainError("beta", "must be a finite positive number");
  const double L = quad.tail_truncation * beta;
  const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * beta);
  std::vector<double> breaks;
  for (double p : {-1.0 - sigma, -1.0 + sigma, -sigma, 0.0, sigma})
    if (p > -L && p < L)
      breaks.push_back(p);
  std::sort(breaks.begin(), breaks.end());
  auto z_part = [&](double v) {
    return norm * std::exp(-0.5 * (v / beta) * (v / beta)) *
           (z_fn(sigma, 1.0 + v) - z_fn(sigma, v));
  };
  Estimate total = numeric::integrate(z_part, -L, L, quad, breaks).scaled(-1.0);

  const double r = sigma / 8.0;
  const double w = std::sqrt(2.0) * beta;
  for (auto [p, residue] : {std::pair{-1.0 + sigma, r}, std::pair{-1.0 - sigma, -r},
                            std::pair{sigma, -r}, std::pair{-sigma, r}})
    total += dawson(p / w, quad).scaled(-residue * std::sqrt(2.0) / beta);
  return total;
}

MonteCarloEstimate mc_gauss_oracle(const RealFunction &f, double beta,
                                   std::uint64_t samples, std::uint64_t seed,
                                   unsigned threads) {
  if (!(beta > 0.0))
    throw DomainError("beta", "Monte Carlo smearing needs beta > 0");
  if (samples == 0)
    throw DomainError("samples", "need at least one sample");

  const Philox4x32 gen(seed);
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<ChunkStats> stats(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (std::uint64_t c = next++; c < chunks; c = next++) {
        const std::uint64_t begin = c * kChunk;
        const std::uint64_t end = std::min(samples, begin + kChunk);
        ChunkStats s;
        for (std::uint64_t k = begin; k < end; k += 2) {
          const auto u = gen.uniform_pair(k / 2);
          const double r = std::sqrt(-2.0 * std::log(u[0]));
          const double phase = 2.0 * std::numbers::pi * u[1];
          const double normals[2] = {r * std::cos(phase), r * std::sin(phase)};
          for (int j = 0; j < 2 && k + j < end; ++j) {
            const double x = f(beta * normals[j]);
            ++s.n;
            const double delta = x - s.mean;
            s.mean += delta / static_cast<double>(s.n);
            s.m2 += delta * (x - s.mean);
          }
        }
        stats[c] = s;
      }
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure)
        failure = std::current_exception();
      next = chunks;
    }
  };

  unsigned n_threads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(std::min<std::uint64_t>(n_threads, chunks));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n_threads; ++i)
      pool.emplace_back(worker);
  }

  if (failure)
    std::rethrow_exception(failure);

  ChunkStats all;
  for (const ChunkStats &s : stats)
    merge(all, s);
  MonteCarloEstimate out;
  out.mean = all.mean;
  out.samples = all.n;
  if (all.n > 1)
    out.std_error = std::sqrt(all.m2 / static_cast<double>(all.n - 1) /
                              static_cast<double>(all.n));
  return out;
}

} // namespace vacfluct
