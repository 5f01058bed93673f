#include "claw/flux.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "claw/kernels.hpp"

namespace claw {

double SampledFunction::operator()(double x) const {
  if (x <= grid.front()) return values.front();
  if (x >= grid.back()) return values.back();
  auto it = std::upper_bound(grid.begin(), grid.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - grid.begin()) - 1;
  const double t = (x - grid[i]) / (grid[i + 1] - grid[i]);
  return values[i] + t * (values[i + 1] - values[i]);
}

void SampledFunction::validate() const {
  if (grid.size() < 2 || grid.size() != values.size())
    throw ConfigError("SampledFunction: bad shape");
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i + 1] > grid[i]))
      throw ConfigError("SampledFunction: grid not strictly increasing");
  for (double v : values)
    if (!std::isfinite(v)) throw NonFinite();
}

FluxPair::FluxPair(ScalarFn eta, ScalarFn phi, ScalarFn eta_prime,
                   ScalarFn phi_prime, ScalarFn eta_second, ScalarFn phi_second,
                   Interval domain, std::string name)
    : eta_(std::move(eta)),
      phi_(std::move(phi)),
      eta_prime_(std::move(eta_prime)),
      phi_prime_(std::move(phi_prime)),
      eta_second_(std::move(eta_second)),
      phi_second_(std::move(phi_second)),
      domain_(domain),
      name_(std::move(name)) {
  if (!(domain_.hi > domain_.lo)) throw ConfigError("FluxPair: empty domain");
  constexpr int kSamples = 1001;
  for (int i = 0; i < kSamples; ++i) {
    const double u =
        domain_.lo + (domain_.hi - domain_.lo) * i / double(kSamples - 1);
    const double ep = eta_prime_(u);
    if (!std::isfinite(ep) || !std::isfinite(eta_(u)) ||
        !std::isfinite(phi_(u)) || !std::isfinite(phi_prime_(u)))
      throw NonFinite();
    if (ep <= 0.0) throw NonMonotoneEta();
  }
}

double FluxPair::characteristic_speed(double u) const {
  if (!domain_.contains(u)) throw OutOfDomain();
  return phi_prime_(u) / eta_prime_(u);
}

double FluxPair::eta_inverse(double v) const {
  double u = inverse_monotone(eta_, v, domain_);
  // one Newton polish past the bisection tolerance
  const double d = eta_prime_(u);
  if (d > 0.0) {
    const double step = (eta_(u) - v) / d;
    const double refined = u - step;
    if (domain_.contains(refined)) u = refined;
  }
  return u;
}

double FluxPair::hamiltonian(double v) const {
  const Interval r = eta_range();
  if (v < r.lo - 1e-12 * (1.0 + std::abs(r.lo)) ||
      v > r.hi + 1e-12 * (1.0 + std::abs(r.hi)))
    throw OutOfRange();
  return phi_(eta_inverse(std::clamp(v, r.lo, r.hi)));
}

Interval FluxPair::speed_range() const {
  constexpr int kSamples = 1001;
  double lo = HUGE_VAL, hi = -HUGE_VAL;
  for (int i = 0; i < kSamples; ++i) {
    const double u =
        domain_.lo + (domain_.hi - domain_.lo) * i / double(kSamples - 1);
    const double a = phi_prime_(u) / eta_prime_(u);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  return {lo, hi};
}

double inverse_monotone(const ScalarFn& f, double y, Interval bracket) {
  return invert_monotone(f, y, bracket.lo, bracket.hi);
}

SampledFunction legendre_conjugate(const SampledFunction& f,
                                   const std::vector<double>& s_grid) {
  f.validate();
  SampledFunction out;
  out.grid = s_grid;
  out.values.resize(s_grid.size());
  const auto& k = kernels::active();
  for (std::size_t j = 0; j < s_grid.size(); ++j) {
    out.values[j] =
        k.affine_max(s_grid[j], f.grid.data(), f.values.data(), f.grid.size());
  }
  return out;
}

ConvexityClass convexity_class(const FluxPair& fp) {
  constexpr int kSamples = 1001;
  constexpr double kThreshold = 1e-10;
  const Interval d = fp.domain();
  const double du = (d.hi - d.lo) / double(kSamples - 1);
  const double delta = 0.5 * du;
  auto speed = [&](double u) { return fp.phi_prime(u) / fp.eta_prime(u); };

  int pos = 0, neg = 0;
  std::optional<double> witness;
  double prev_sign = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double u = d.lo + du * i;
    const double ul = std::max(d.lo, u - delta);
    const double ur = std::min(d.hi, u + delta);
    const double slope = (speed(ur) - speed(ul)) / (ur - ul);
    double sign = 0.0;
    if (slope > kThreshold) {
      ++pos;
      sign = 1.0;
    } else if (slope < -kThreshold) {
      ++neg;
      sign = -1.0;
    }
    if (!witness && prev_sign != 0.0 && sign != 0.0 && sign != prev_sign)
      witness = u;
    if (sign != 0.0) prev_sign = sign;
  }
  ConvexityClass c;
  if (pos == kSamples) {
    c.tag = ConvexityTag::strictly_convex;
  } else if (neg == kSamples) {
    c.tag = ConvexityTag::strictly_concave;
  } else {
    c.tag = ConvexityTag::neither;
    c.witness = witness;
  }
  return c;
}

SampledFunction hamiltonian_table(const FluxPair& fp, int n) {
  SampledFunction h;
  h.grid.resize(n);
  h.values.resize(n);
  const Interval d = fp.domain();
  // Sample in u and map through eta: avoids n bisections and lands the
  // same curve (v_i = eta(u_i) is strictly increasing).
  for (int i = 0; i < n; ++i) {
    const double u = d.lo + (d.hi - d.lo) * i / double(n - 1);
    h.grid[i] = fp.eta(u);
    h.values[i] = fp.phi(u);
  }
  return h;
}

namespace {

FluxPair power_flux(double p, Interval domain) {
  return FluxPair([](double u) { return u; },
                  [p](double u) { return std::pow(u, p) / p; },
                  [](double) { return 1.0; },
                  [p](double u) { return std::pow(u, p - 1.0); },
                  [](double) { return 0.0; },
                  [p](double u) { return (p - 1.0) * std::pow(u, p - 2.0); },
                  domain, "power");
}

FluxPair tabulated_flux(const FluxSpec& spec) {
  MonotoneCubic eta(spec.table_u, spec.table_eta);
  MonotoneCubic phi(spec.table_u, spec.table_phi);
  const double h = (spec.domain.hi - spec.domain.lo) * 1e-6;
  auto second = [h](const MonotoneCubic& f) {
    return [f, h](double u) {
      return (f.derivative(u + h) - f.derivative(u - h)) / (2.0 * h);
    };
  };
  return FluxPair([eta](double u) { return eta(u); },
                  [phi](double u) { return phi(u); },
                  [eta](double u) { return eta.derivative(u); },
                  [phi](double u) { return phi.derivative(u); },
                  second(eta), second(phi), spec.domain, "table");
}

}  // namespace

FluxPair burgers_flux(Interval domain) {
  return FluxPair([](double u) { return u; },
                  [](double u) { return 0.5 * u * u; },
                  [](double) { return 1.0; }, [](double u) { return u; },
                  [](double) { return 0.0; }, [](double) { return 1.0; },
                  domain, "burgers");
}

FluxPair gelfand_q_flux(Interval domain) {
  return FluxPair([](double u) { return 0.5 * u * u; },
                  [](double u) { return u * u * u / 3.0; },
                  [](double u) { return u; },
                  [](double u) { return u * u; },
                  [](double) { return 1.0; },
                  [](double u) { return 2.0 * u; }, domain, "gelfand_q");
}

FluxPair exp_pair_flux(Interval domain) {
  return FluxPair([](double u) { return std::exp(u); },
                  [](double u) { return 0.5 * std::exp(2.0 * u); },
                  [](double u) { return std::exp(u); },
                  [](double u) { return std::exp(2.0 * u); },
                  [](double u) { return std::exp(u); },
                  [](double u) { return 2.0 * std::exp(2.0 * u); }, domain,
                  "exp_pair");
}

FluxPair ph_flux(double phi0, double phi1, double mu, Interval domain) {
  // Phi(u) = phi0 + phi1 * u; eta and phi are the closed-form
  // antiderivatives of 1/(Phi+mu) and (Phi-mu)/(Phi+mu), anchored at 0.
  const double c = phi0 + mu;
  if (!(c > 0.0)) throw ConfigError("ph_flux: Phi(0) + mu must be positive");
  auto denom = [phi1, c](double u) { return c + phi1 * u; };
  ScalarFn eta, phi;
  if (phi1 == 0.0) {
    eta = [c](double u) { return u / c; };
    phi = [c, mu](double u) { return u * (c - 2.0 * mu) / c; };
  } else {
    eta = [phi1, c, denom](double u) {
      return std::log(denom(u) / c) / phi1;
    };
    phi = [phi1, c, mu, denom](double u) {
      return u - (2.0 * mu / phi1) * std::log(denom(u) / c);
    };
  }
  return FluxPair(
      eta, phi, [denom](double u) { return 1.0 / denom(u); },
      [mu, denom](double u) { return (denom(u) - 2.0 * mu) / denom(u); },
      [phi1, denom](double u) {
        const double d = denom(u);
        return -phi1 / (d * d);
      },
      [phi1, mu, denom](double u) {
        const double d = denom(u);
        return 2.0 * mu * phi1 / (d * d);
      },
      domain, "ph");
}

FluxPair make_flux_pair(const FluxSpec& spec) {
  if (spec.family == "burgers") return burgers_flux(spec.domain);
  if (spec.family == "power") return power_flux(spec.p, spec.domain);
  if (spec.family == "gelfand_q") return gelfand_q_flux(spec.domain);
  if (spec.family == "exp_pair") return exp_pair_flux(spec.domain);
  if (spec.family == "ph")
    return ph_flux(spec.phi0, spec.phi1, spec.mu, spec.domain);
  if (spec.family == "table") return tabulated_flux(spec);
  throw ConfigError("unknown flux family: " + spec.family);
}

}  // namespace claw
