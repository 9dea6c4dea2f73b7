#pragma once

// Partial piecewise-linear functions: sorted, non-overlapping elements with
// gaps where the function is undefined. Used as scratch space by the curve
// operators before results are turned back into Curves.

#include <optional>
#include <utility>
#include <vector>

#include "tsnnc/curve.hpp"

namespace tsnnc::pwl {

using Pwl = std::vector<Element>;

enum class Pick { min, max };

/// Keeps the parts of `f` inside [lo, hi].
Pwl clip(const Pwl& f, const Rational& lo, const Rational& hi);

/// Pointwise min or max. Undefined acts as the neutral element.
Pwl merge(const Pwl& a, const Pwl& b, Pick pick);

/// Pointwise sum, defined where both are.
Pwl add(const Pwl& a, const Pwl& b);

/// Envelope of many partial functions.
Pwl envelope(std::vector<Pwl> parts, Pick pick);

/// Joins seg-point-seg runs that describe one straight continuous piece.
Pwl simplify(const Pwl& f);

/// Sorted distinct breakpoints (element ends) of f inside [lo, hi].
std::vector<Rational> breakpoints(const Pwl& f, const Rational& lo, const Rational& hi);

/// Monotone-query cursor over a Pwl.
class Cursor {
 public:
  explicit Cursor(const Pwl& f) : f_(f) {}
  std::optional<Rational> at_point(const Rational& x);
  /// (start value, slope) of the segment covering (lo, hi), if any.
  std::optional<std::pair<Rational, Rational>> on_interval(const Rational& lo, const Rational& hi);

 private:
  const Pwl& f_;
  size_t i_ = 0;
};

}  // namespace tsnnc::pwl
