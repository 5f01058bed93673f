#include "claw/grid.hpp"

#include <algorithm>

namespace claw {

GridFunction::GridFunction(Grid1D g, std::vector<double> v, double t)
    : grid(g), values(std::move(v)), time(t) {
  if (static_cast<int>(values.size()) != grid.n_nodes())
    throw GridMismatch("GridFunction: value count != node count");
  for (double x : values)
    if (!std::isfinite(x)) throw NonFinite();
}

GridFunction GridFunction::sample(Grid1D g,
                                  const std::function<double(double)>& f,
                                  double t) {
  std::vector<double> v(g.n_nodes());
  for (int i = 0; i < g.n_nodes(); ++i) v[i] = f(g.node(i));
  return GridFunction(g, std::move(v), t);
}

double GridFunction::operator()(double x) const {
  if (x <= grid.x_min) return values.front();
  if (x >= grid.x_max) return values.back();
  const double s = (x - grid.x_min) / grid.dx();
  const int i = std::min(static_cast<int>(s), grid.n_cells - 1);
  const double t = s - i;
  return values[i] + t * (values[i + 1] - values[i]);
}

double GridFunction::min_value() const {
  return *std::min_element(values.begin(), values.end());
}

double GridFunction::max_value() const {
  return *std::max_element(values.begin(), values.end());
}

GridFunction resample(const GridFunction& f, const Grid1D& target) {
  std::vector<double> v(target.n_nodes());
  for (int i = 0; i < target.n_nodes(); ++i) v[i] = f(target.node(i));
  return GridFunction(target, std::move(v), f.time);
}

double l1_distance(const GridFunction& f, const GridFunction& g) {
  const GridFunction* other = &g;
  GridFunction tmp;
  if (g.grid.n_cells != f.grid.n_cells || g.grid.x_min != f.grid.x_min ||
      g.grid.x_max != f.grid.x_max) {
    tmp = resample(g, f.grid);
    other = &tmp;
  }
  const double dx = f.grid.dx();
  double s = 0.0;
  for (int i = 0; i < f.grid.n_nodes(); ++i) {
    const double w = (i == 0 || i == f.grid.n_cells) ? 0.5 : 1.0;
    s += w * std::abs(f.values[i] - other->values[i]);
  }
  return s * dx;
}

}  // namespace claw
