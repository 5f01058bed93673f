#include "claw/variational.hpp"

#include <algorithm>
#include <cmath>

#include "claw/kernels.hpp"

namespace claw {

namespace {

SampledFunction cumulative_trapezoid(const GridFunction& u0,
                                     const ScalarFn& integrand) {
  const int n = u0.grid.n_nodes();
  const double dx = u0.grid.dx();
  std::vector<double> g(n), w(n);
  for (int i = 0; i < n; ++i) {
    g[i] = u0.grid.node(i);
    w[i] = integrand(u0.values[i]);
  }
  std::vector<double> cum(n, 0.0);
  for (int i = 1; i < n; ++i)
    cum[i] = cum[i - 1] + 0.5 * (w[i] + w[i - 1]) * dx;
  // anchor at the node nearest x = 0
  int anchor = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(g[i]) < std::abs(g[anchor])) anchor = i;
  const double base = cum[anchor];
  for (double& c : cum) c -= base;
  SampledFunction out;
  out.grid = std::move(g);
  out.values = std::move(cum);
  return out;
}

}  // namespace

SampledFunction potential_initial(const FluxPair& fp, const GridFunction& u0) {
  for (double v : u0.values)
    if (!fp.domain().contains(v, 1e-12)) throw OutOfDomain();
  return cumulative_trapezoid(u0, [&fp](double u) { return fp.eta(u); });
}

VariationalSolver::VariationalSolver(const FluxPair& fp,
                                     const GridFunction& u0,
                                     LaxOleinikIntegrand integrand,
                                     int scan_points)
    : fp_(fp),
      u0_(u0),
      lo_uses_raw_(integrand == LaxOleinikIntegrand::raw),
      scan_points_(scan_points) {
  potential_ = potential_initial(fp_, u0_);
  if (lo_uses_raw_)
    raw_potential_ = cumulative_trapezoid(u0_, [](double u) { return u; });

  u_lo_ = u0_.min_value();
  u_hi_ = u0_.max_value();
  if (u_hi_ - u_lo_ < 1e-13) {  // constant data: widen for well-posed fans
    u_lo_ = std::max(fp_.domain().lo, u_lo_ - 1e-6);
    u_hi_ = std::min(fp_.domain().hi, u_hi_ + 1e-6);
  }
  a_lo_ = fp_.characteristic_speed(u_lo_);
  a_hi_ = fp_.characteristic_speed(u_hi_);
  strictly_convex_ =
      convexity_class(fp_).tag == ConvexityTag::strictly_convex;

  // L = H* sampled on a slope grid covering the full speed range, padded
  // so the evaluated slopes (x - y)/t stay interior for every query.
  const Interval sr = fp_.speed_range();
  const double pad = std::max(1.0, sr.hi - sr.lo);
  const int n_xi = 4097;
  const SampledFunction h = hamiltonian_table(fp_, 4097);
  std::vector<double> xi(n_xi);
  for (int i = 0; i < n_xi; ++i)
    xi[i] = (sr.lo - pad) + (sr.hi - sr.lo + 2.0 * pad) * i / double(n_xi - 1);
  conjugate_ = legendre_conjugate(h, xi);

  // Characteristic launches from the piecewise-linear initial data. Cells
  // with a large speed jump (an unresolved fan) get proportionally more
  // launches so the fan they open stays densely sampled in arrival space.
  const int kRefine = 8;
  const double speed_span = std::max(a_hi_ - a_lo_, 1e-300);
  const int n = u0_.grid.n_nodes();
  const double dx = u0_.grid.dx();
  launch_x_.reserve(static_cast<std::size_t>(n) * kRefine);
  for (int i = 0; i + 1 < n; ++i) {
    const double da = std::abs(fp_.characteristic_speed(u0_.values[i + 1]) -
                               fp_.characteristic_speed(u0_.values[i]));
    const int refine = std::clamp(
        static_cast<int>(std::ceil(2000.0 * da / speed_span)), kRefine, 2048);
    for (int j = 0; j < refine; ++j) {
      const double frac = j / double(refine);
      const double x0 = u0_.grid.node(i) + frac * dx;
      const double u =
          u0_.values[i] + frac * (u0_.values[i + 1] - u0_.values[i]);
      launch_x_.push_back(x0);
      launch_speed_.push_back(fp_.characteristic_speed(u));
      launch_phi0_.push_back(potential_(x0));
      // dPhi/dt along the characteristic: p H'(p) - H(p) with p = eta(u)
      launch_rate_.push_back(fp_.eta(u) * launch_speed_.back() - fp_.phi(u));
    }
  }
  launch_x_.push_back(u0_.grid.x_max);
  launch_speed_.push_back(fp_.characteristic_speed(u0_.values.back()));
  launch_phi0_.push_back(potential_(u0_.grid.x_max));
  launch_rate_.push_back(fp_.eta(u0_.values.back()) * launch_speed_.back() -
                         fp_.phi(u0_.values.back()));
}

double VariationalSolver::potential_extended(const SampledFunction& p,
                                             double y) const {
  // Constant data outside the grid means the potential continues with the
  // boundary slope.
  if (y < p.grid.front()) {
    const double slope = (p.values[1] - p.values[0]) / (p.grid[1] - p.grid[0]);
    return p.values.front() + slope * (y - p.grid.front());
  }
  if (y > p.grid.back()) {
    const std::size_t n = p.grid.size();
    const double slope =
        (p.values[n - 1] - p.values[n - 2]) / (p.grid[n - 1] - p.grid[n - 2]);
    return p.values.back() + slope * (y - p.grid.back());
  }
  return p(y);
}

double VariationalSolver::functional(double t, double x, double y) const {
  const SampledFunction& p = lo_uses_raw_ ? raw_potential_ : potential_;
  return t * conjugate_((x - y) / t) + potential_extended(p, y);
}

std::pair<double, MinimizerRecord> VariationalSolver::lax_oleinik(
    double t, double x) const {
  if (!(t > 0.0)) throw ConfigError("lax_oleinik: t must be positive");
  if (!strictly_convex_) throw NotConvex();

  // Any minimizer satisfies (x - y)/t = a(u) for a data-hull u, so the
  // scan window is the corresponding y-range padded by a cell.
  const double pad = 2.0 * u0_.grid.dx() + 1e-9;
  const double y_lo = x - t * a_hi_ - pad;
  const double y_hi = x - t * a_lo_ + pad;
  const int n = scan_points_;

  int best = 0;
  double best_val = HUGE_VAL;
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) {
    const double y = y_lo + (y_hi - y_lo) * i / double(n - 1);
    vals[i] = functional(t, x, y);
    if (!std::isfinite(vals[i])) throw NonFiniteFunctional();
    if (vals[i] < best_val) {
      best_val = vals[i];
      best = i;
    }
  }
  const double h = (y_hi - y_lo) / double(n - 1);
  const double bracket_lo = y_lo + h * std::max(0, best - 1);
  const double bracket_hi = y_lo + h * std::min(n - 1, best + 1);
  const double y_star = golden_minimize(
      [&](double y) { return functional(t, x, y); }, bracket_lo, bracket_hi,
      1e-10);

  // second-best local minimum on the coarse scan (uniqueness margin)
  double second = HUGE_VAL;
  for (int i = 1; i + 1 < n; ++i) {
    if (std::abs(i - best) <= 1) continue;
    if (vals[i] <= vals[i - 1] && vals[i] <= vals[i + 1])
      second = std::min(second, vals[i]);
  }

  MinimizerRecord rec;
  rec.t = t;
  rec.x = x;
  rec.y_star = y_star;
  rec.value = functional(t, x, y_star);
  rec.unique_within = std::isfinite(second) ? second - rec.value : HUGE_VAL;

  // u = eta^{-1}(G(xi)) with G the inverse of H'; equivalently a(u) = xi
  // on the data hull.
  const double xi = std::clamp((x - y_star) / t, a_lo_, a_hi_);
  double u;
  if (a_hi_ - a_lo_ < 1e-13) {
    u = u_lo_;
  } else {
    u = invert_monotone(
        [this](double w) { return fp_.characteristic_speed(w); }, xi, u_lo_,
        u_hi_);
  }
  return {u, rec};
}

double VariationalSolver::hopf_lax_potential(double t, double x) const {
  if (!(t > 0.0)) throw ConfigError("hopf_lax_potential: t must be positive");
  if (!strictly_convex_) throw NotConvex();
  const double pad = 2.0 * u0_.grid.dx() + 1e-9;
  const double y_lo = x - t * a_hi_ - pad;
  const double y_hi = x - t * a_lo_ + pad;
  auto J = [&](double y) {
    return t * conjugate_((x - y) / t) + potential_extended(potential_, y);
  };
  const int n = scan_points_;
  int best = 0;
  double best_val = HUGE_VAL;
  for (int i = 0; i < n; ++i) {
    const double y = y_lo + (y_hi - y_lo) * i / double(n - 1);
    const double v = J(y);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double h = (y_hi - y_lo) / double(n - 1);
  const double y_star =
      golden_minimize(J, y_lo + h * std::max(0, best - 1),
                      y_lo + h * std::min(n - 1, best + 1), 1e-10);
  return J(y_star);
}

double VariationalSolver::characteristics_potential(double t, double x) const {
  if (!(t > 0.0))
    throw ConfigError("characteristics_potential: t must be positive");
  if (!strictly_convex_) throw NotConvex();
  const double near = 0.5 * u0_.grid.dx();
  double best = HUGE_VAL;
  // nearest isolated arrival, used only when no segment brackets x
  double fallback = HUGE_VAL, fallback_gap = near;
  const std::size_t n = launch_x_.size();
  double prev_arrival = launch_x_[0] + t * launch_speed_[0];
  double prev_phi = launch_phi0_[0] + t * launch_rate_[0];
  if (std::abs(prev_arrival - x) <= fallback_gap) {
    fallback = prev_phi;
    fallback_gap = std::abs(prev_arrival - x);
  }
  for (std::size_t i = 1; i < n; ++i) {
    const double arrival = launch_x_[i] + t * launch_speed_[i];
    const double phi = launch_phi0_[i] + t * launch_rate_[i];
    const double lo = std::min(prev_arrival, arrival);
    const double hi = std::max(prev_arrival, arrival);
    if (x >= lo && x <= hi && hi - lo > 0.0) {
      const double w = (x - prev_arrival) / (arrival - prev_arrival);
      best = std::min(best, prev_phi + w * (phi - prev_phi));
    } else if (std::abs(arrival - x) < fallback_gap) {
      fallback = phi;
      fallback_gap = std::abs(arrival - x);
    }
    prev_arrival = arrival;
    prev_phi = phi;
  }
  if (!std::isfinite(best)) best = fallback;
  if (!std::isfinite(best)) throw NoCharacteristicHits();
  return best;
}

double VariationalSolver::hopf_monotone(double t, double x,
                                        MonotoneSupVariable reading) const {
  if (!(t > 0.0)) throw ConfigError("hopf_monotone: t must be positive");
  for (std::size_t i = 0; i + 1 < u0_.values.size(); ++i)
    if (u0_.values[i + 1] < u0_.values[i] - 1e-12) throw NotMonotoneData();
  const double um = u0_.values.front();
  const double up = u0_.values.back();
  if (up - um < 1e-13) return um;

  const auto& k = kernels::active();
  // inner sup:  sup_y [c y - W(y)]  over the data grid, W the primitive
  const SampledFunction& W =
      (reading == MonotoneSupVariable::u_value)
          ? potential_
          : (lo_uses_raw_ ? raw_potential_
                          : cumulative_trapezoid(u0_, [](double u) { return u; }));
  auto inner = [&](double c) {
    return k.affine_max(c, W.grid.data(), W.values.data(), W.grid.size());
  };
  auto score = [&](double s) {
    if (reading == MonotoneSupVariable::u_value) {
      const double c = fp_.eta(s);
      return -inner(c) + c * x - t * fp_.phi(s);
    }
    // printed reading: s itself multiplies x and feeds eta^{-1}
    return -inner(s) + s * x - t * fp_.phi(fp_.eta_inverse(std::clamp(
                                   s, fp_.eta_range().lo, fp_.eta_range().hi)));
  };

  const int n = scan_points_;
  const double span = up - um;
  int best = 0;
  double best_val = -HUGE_VAL;
  for (int i = 0; i < n; ++i) {
    const double s = um + span * (i + 0.5) / double(n + 1);
    const double v = score(s);
    if (v > best_val + 1e-15) {  // strict: ties keep the smallest s
      best_val = v;
      best = i;
    }
  }
  const double s_lo = std::max(um, um + span * (best - 0.5) / double(n + 1));
  const double s_hi = std::min(up, um + span * (best + 2.5) / double(n + 1));
  const double s_star = golden_minimize([&](double s) { return -score(s); },
                                        s_lo, s_hi, 1e-10);
  if (reading == MonotoneSupVariable::u_value) return s_star;
  return fp_.eta_inverse(
      std::clamp(s_star, fp_.eta_range().lo, fp_.eta_range().hi));
}

double VariationalSolver::u_from_potential(
    const std::function<double(double, double)>& pot, double t,
    double x) const {
  const double h = 0.5 * u0_.grid.dx();
  const double slope = (pot(t, x + h) - pot(t, x - h)) / (2.0 * h);
  const Interval r{fp_.eta(u_lo_), fp_.eta(u_hi_)};
  return fp_.eta_inverse(std::clamp(slope, r.lo, r.hi));
}

std::pair<double, MinimizerRecord> lax_oleinik(const FluxPair& fp,
                                               const GridFunction& u0,
                                               double t, double x) {
  return VariationalSolver(fp, u0).lax_oleinik(t, x);
}

double hopf_lax_convex_h(const FluxPair& fp, const GridFunction& u0, double t,
                         double x) {
  return VariationalSolver(fp, u0).hopf_lax_potential(t, x);
}

double characteristics_potential(const FluxPair& fp, const GridFunction& u0,
                                 double t, double x) {
  return VariationalSolver(fp, u0).characteristics_potential(t, x);
}

double hopf_monotone(const FluxPair& fp, const GridFunction& u0, double t,
                     double x, MonotoneSupVariable reading) {
  return VariationalSolver(fp, u0).hopf_monotone(t, x, reading);
}

double hopf_convex_initial(const FluxPair& fp, const SampledFunction& U0,
                           double t, double x) {
  U0.validate();
  if (t < 0.0) throw ConfigError("hopf_convex_initial: t < 0");
  // convexity check: nonnegative second differences
  for (std::size_t i = 1; i + 1 < U0.grid.size(); ++i) {
    const double hl = U0.grid[i] - U0.grid[i - 1];
    const double hr = U0.grid[i + 1] - U0.grid[i];
    const double sl = (U0.values[i] - U0.values[i - 1]) / hl;
    const double sr = (U0.values[i + 1] - U0.values[i]) / hr;
    if (sr < sl - 1e-10) throw NotConvexInitial();
  }
  const SampledFunction h = hamiltonian_table(fp, 2049);
  const Interval r = fp.eta_range();
  const int n = 2049;
  const auto& k = kernels::active();
  std::vector<double> s_grid(n);
  for (int i = 0; i < n; ++i)
    s_grid[i] = r.lo + (r.hi - r.lo) * i / double(n - 1);
  const SampledFunction conj = legendre_conjugate(U0, s_grid);
  auto score = [&](double s) { return s * x - h(s) * t - conj(s); };
  int best = 0;
  double best_val = -HUGE_VAL;
  for (int i = 0; i < n; ++i) {
    const double w = score(s_grid[i]);
    if (w > best_val) {
      best_val = w;
      best = i;
    }
  }
  const double ds = (r.hi - r.lo) / double(n - 1);
  const double s_star = golden_minimize(
      [&](double s) { return -score(s); },
      std::max(r.lo, s_grid[best] - ds), std::min(r.hi, s_grid[best] + ds),
      1e-12);
  return score(s_star);
}

}  // namespace claw
