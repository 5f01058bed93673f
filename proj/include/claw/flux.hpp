#ifndef CLAW_FLUX_HPP
#define CLAW_FLUX_HPP

// The model pair (eta, phi): density transform and flux, their
// derivatives, the composed Hamiltonian H = phi(eta^{-1}(.)), discrete
// Legendre conjugates and monotone inversion. Shared by every solver.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "claw/errors.hpp"
#include "claw/numerics.hpp"

namespace claw {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double u, double slack = 0.0) const {
    return u >= lo - slack && u <= hi + slack;
  }
};

// A function sampled on a strictly increasing grid; evaluated by linear
// interpolation, clamped to the endpoint values outside the grid.
struct SampledFunction {
  std::vector<double> grid;
  std::vector<double> values;

  double operator()(double x) const;
  void validate() const;  // throws on bad grid / non-finite values
};

class FluxPair {
 public:
  FluxPair(ScalarFn eta, ScalarFn phi, ScalarFn eta_prime, ScalarFn phi_prime,
           ScalarFn eta_second, ScalarFn phi_second, Interval domain,
           std::string name = "custom");

  double eta(double u) const { return eta_(u); }
  double phi(double u) const { return phi_(u); }
  double eta_prime(double u) const { return eta_prime_(u); }
  double phi_prime(double u) const { return phi_prime_(u); }
  double eta_second(double u) const { return eta_second_(u); }
  double phi_second(double u) const { return phi_second_(u); }

  const Interval& domain() const { return domain_; }
  Interval eta_range() const { return {eta_(domain_.lo), eta_(domain_.hi)}; }
  const std::string& name() const { return name_; }

  // phi'(u) / eta'(u); throws OutOfDomain outside [a, b].
  double characteristic_speed(double u) const;

  // eta^{-1}(v) by bisection on the domain.
  double eta_inverse(double v) const;

  // H(v) = phi(eta^{-1}(v)); throws OutOfRange for v outside eta([a, b]).
  double hamiltonian(double v) const;

  // Speed range {a(u) : u in domain} (characteristic_speed is evaluated on
  // a dense sample; well defined also for non-monotone speeds).
  Interval speed_range() const;

 private:
  ScalarFn eta_, phi_, eta_prime_, phi_prime_, eta_second_, phi_second_;
  Interval domain_;
  std::string name_;
};

enum class ConvexityTag { strictly_convex, strictly_concave, neither };

struct ConvexityClass {
  ConvexityTag tag = ConvexityTag::neither;
  std::optional<double> witness;  // u where (phi'/eta')' changes sign
};

// Describes one of the built-in model families or a tabulated pair.
struct FluxSpec {
  std::string family;  // burgers | power | gelfand_q | exp_pair | ph | table
  Interval domain{-1.0, 1.0};
  double p = 2.0;          // power family exponent
  double phi0 = 1.0;       // ph family: Phi(u) = phi0 + phi1 * u
  double phi1 = 1.0;
  double mu = 0.0;         // ph family attrition
  std::vector<double> table_u, table_eta, table_phi;  // tabulated pair
};

FluxPair make_flux_pair(const FluxSpec& spec);

// Convenience constructors for the built-in families.
FluxPair burgers_flux(Interval domain = {-1.0, 1.0});
FluxPair gelfand_q_flux(Interval domain);
FluxPair exp_pair_flux(Interval domain = {-1.0, 1.0});
// Polterovich-Henkin pair on [0, 1]: eta' = 1/(Phi+mu), phi' = (Phi-mu)/(Phi+mu)
// with linear efficiency Phi(u) = phi0 + phi1 * u.
FluxPair ph_flux(double phi0, double phi1, double mu,
                 Interval domain = {0.0, 1.0});

// Exposed as a free function so tabulated pairs and G = (phi'/eta')^{-1}
// use the same machinery.
double inverse_monotone(const ScalarFn& f, double y, Interval bracket);

// Discrete Legendre transform: g(s) = max over f's grid of s*x - f(x).
SampledFunction legendre_conjugate(const SampledFunction& f,
                                   const std::vector<double>& s_grid);

ConvexityClass convexity_class(const FluxPair& fp);

// H sampled on n points of eta([a, b]); cached input to Legendre transforms.
SampledFunction hamiltonian_table(const FluxPair& fp, int n = 4097);

}  // namespace claw

#endif  // CLAW_FLUX_HPP
