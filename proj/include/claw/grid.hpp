#ifndef CLAW_GRID_HPP
#define CLAW_GRID_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "claw/errors.hpp"

namespace claw {

// Uniform 1-D grid; values live on the n_cells + 1 nodes.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_cells = 8;

  Grid1D() = default;
  Grid1D(double lo, double hi, int n) : x_min(lo), x_max(hi), n_cells(n) {
    if (!(x_max > x_min) || n_cells < 8) throw ConfigError("Grid1D: bad grid");
  }

  double dx() const { return (x_max - x_min) / n_cells; }
  int n_nodes() const { return n_cells + 1; }
  double node(int i) const { return x_min + dx() * i; }
};

struct GridFunction {
  Grid1D grid;
  std::vector<double> values;
  double time = 0.0;

  GridFunction() = default;
  GridFunction(Grid1D g, std::vector<double> v, double t = 0.0);

  static GridFunction sample(Grid1D g, const std::function<double(double)>& f,
                             double t = 0.0);

  // Piecewise-linear evaluation, clamped outside the grid.
  double operator()(double x) const;

  double min_value() const;
  double max_value() const;
};

// Nodal trapezoid L1 distance on a common grid; resamples g onto f's grid
// (linear interpolation, clamped) when the grids differ.
double l1_distance(const GridFunction& f, const GridFunction& g);

// Linear-interpolation resampling onto a target grid. Monotone: introduces
// no new extrema.
GridFunction resample(const GridFunction& f, const Grid1D& target);

}  // namespace claw

#endif  // CLAW_GRID_HPP
