#pragma once

#include <variant>
#include <vector>

#include "tsnnc/curve.hpp"

namespace tsnnc {

/// Samples of a cumulative function at t = 0, step, 2 step, ..., horizon.
/// Between samples the function is taken to be linear.
struct GridCurve {
  Rational step;
  Rational horizon;
  std::vector<Rational> values;

  /// Checks horizon / step is integral, the sample count and monotonicity.
  GridCurve(Rational step, Rational horizon, std::vector<Rational> values);

  /// Finite samples of `f`; throws UnboundedError if f is infinite on the grid.
  static GridCurve sample(const Curve& f, const Rational& step, const Rational& horizon);

  size_t size() const { return values.size(); }
  Rational time(size_t k) const { return step * k; }
};

/// inf over grid points s <= t of a(t - s) + b(s).
GridCurve grid_convolve(const GridCurve& a, const GridCurve& b);

/// sup over grid points u with t + u <= horizon of a(t + u) - b(u). Only exact
/// where the true maximiser lies inside the horizon.
GridCurve grid_deconvolve(const GridCurve& a, const GridCurve& b);

/// Largest horizontal distance within the horizon. Scans every grid point and
/// every point where a crosses a sample level of b, inverting b linearly and
/// taking both one-sided inverses on flat stretches.
Rational grid_horizontal_deviation(const GridCurve& a, const GridCurve& b);

/// max over grid points of a(t) - b(t).
Rational grid_vertical_deviation(const GridCurve& a, const GridCurve& b);

enum class GridMode { conv, deconv, hdev, vdev };

std::variant<GridCurve, Rational> grid_op(GridMode mode, const GridCurve& a, const GridCurve& b);

}  // namespace tsnnc
