#include "tsnnc/grid.hpp"

#include <algorithm>

#include "tsnnc/errors.hpp"

namespace tsnnc {

GridCurve::GridCurve(Rational step_, Rational horizon_, std::vector<Rational> values_)
    : step(std::move(step_)), horizon(std::move(horizon_)), values(std::move(values_)) {
  if (step <= 0 || horizon < 0) throw ParameterError("grid needs step > 0 and horizon >= 0");
  const Rational n = horizon / step;
  if (n.get_den() != 1) throw ParameterError("grid horizon is not a multiple of the step");
  if (values.size() != n.get_num().get_ui() + 1) throw ParameterError("grid sample count does not match horizon");
  for (size_t k = 1; k < values.size(); ++k) {
    if (values[k] < values[k - 1]) throw ParameterError("grid samples decrease at index " + std::to_string(k));
  }
}

GridCurve GridCurve::sample(const Curve& f, const Rational& step, const Rational& horizon) {
  const Rational n = horizon / step;
  if (step <= 0 || n.get_den() != 1) throw ParameterError("grid horizon is not a multiple of the step");
  std::vector<Rational> values;
  const unsigned long count = n.get_num().get_ui();
  values.reserve(count + 1);
  for (unsigned long k = 0; k <= count; ++k) values.push_back(f.value(step * k));
  return GridCurve(step, horizon, std::move(values));
}

namespace {

void require_same_grid(const GridCurve& a, const GridCurve& b) {
  if (a.step != b.step || a.horizon != b.horizon) throw PreconditionError("grid curves use different grids");
}

// Abscissa in [k g, (k+1) g] where the linear piece from v[k] to v[k+1]
// reaches y. Requires v[k] <= y <= v[k+1] and v[k] < v[k+1].
Rational cross(const std::vector<Rational>& v, size_t k, const Rational& y, const Rational& g) {
  return g * k + (y - v[k]) / (v[k + 1] - v[k]) * g;
}

}  // namespace

GridCurve grid_convolve(const GridCurve& a, const GridCurve& b) {
  require_same_grid(a, b);
  const size_t n = a.size();
  std::vector<Rational> out(n);
  Rational sum;
  for (size_t t = 0; t < n; ++t) {
    Rational best = a.values[t] + b.values[0];
    for (size_t s = 1; s <= t; ++s) {
      sum = a.values[t - s] + b.values[s];
      if (sum < best) best = sum;
    }
    out[t] = best;
  }
  return GridCurve(a.step, a.horizon, std::move(out));
}

GridCurve grid_deconvolve(const GridCurve& a, const GridCurve& b) {
  require_same_grid(a, b);
  const size_t n = a.size();
  std::vector<Rational> out(n);
  Rational diff;
  for (size_t t = 0; t < n; ++t) {
    Rational best = a.values[t] - b.values[0];
    for (size_t u = 1; t + u < n; ++u) {
      diff = a.values[t + u] - b.values[u];
      if (diff > best) best = diff;
    }
    out[t] = best;
  }
  // a difference of non-decreasing sequences need not be monotone at the
  // truncated end; keep the running maximum so the result is a valid grid
  for (size_t t = n - 1; t-- > 0;) {
    if (out[t] > out[t + 1]) out[t + 1] = out[t];
  }
  return GridCurve(a.step, a.horizon, std::move(out));
}

Rational grid_horizontal_deviation(const GridCurve& a, const GridCurve& b) {
  require_same_grid(a, b);
  const auto& av = a.values;
  const auto& bv = b.values;
  const Rational& g = a.step;
  const size_t n = a.size();
  Rational best = 0;

  auto consider = [&](const Rational& t, const Rational& y, bool rising) {
    // inf{s : b(s) >= y}
    auto lo = std::lower_bound(bv.begin(), bv.end(), y);
    if (lo == bv.end()) return;
    size_t m = static_cast<size_t>(lo - bv.begin());
    Rational s = m == 0 ? Rational(0) : cross(bv, m - 1, y, g);
    if (s - t > best) best = s - t;
    if (!rising) return;
    // just right of t the level exceeds y: inf{s : b(s) > y}
    auto hi = std::upper_bound(bv.begin(), bv.end(), y);
    if (hi == bv.end()) return;
    m = static_cast<size_t>(hi - bv.begin());
    s = m == 0 ? Rational(0) : cross(bv, m - 1, y, g);
    if (s - t > best) best = s - t;
  };

  for (size_t k = 0; k < n; ++k) {
    consider(a.time(k), av[k], k + 1 < n && av[k + 1] > av[k]);
  }
  for (const auto& level : bv) {
    auto it = std::lower_bound(av.begin(), av.end(), level);
    if (it == av.begin() || it == av.end() || *it == level) continue;
    const size_t k = static_cast<size_t>(it - av.begin()) - 1;
    consider(cross(av, k, level, g), level, true);
  }
  return best;
}

Rational grid_vertical_deviation(const GridCurve& a, const GridCurve& b) {
  require_same_grid(a, b);
  Rational best = a.values[0] - b.values[0];
  Rational diff;
  for (size_t k = 1; k < a.size(); ++k) {
    diff = a.values[k] - b.values[k];
    if (diff > best) best = diff;
  }
  return best;
}

std::variant<GridCurve, Rational> grid_op(GridMode mode, const GridCurve& a, const GridCurve& b) {
  switch (mode) {
    case GridMode::conv: return grid_convolve(a, b);
    case GridMode::deconv: return grid_deconvolve(a, b);
    case GridMode::hdev: return grid_horizontal_deviation(a, b);
    case GridMode::vdev: return grid_vertical_deviation(a, b);
  }
  throw ParameterError("unknown grid mode");
}

}  // namespace tsnnc
