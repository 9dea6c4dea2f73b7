#pragma once

#include <optional>

#include "tsnnc/curve.hpp"

namespace tsnnc {

enum class Pointwise { add, min, max };

/// Exact pointwise combination. The result stays ultimately pseudo-periodic.
Curve pointwise(Pointwise mode, const Curve& a, const Curve& b);

inline Curve operator+(const Curve& a, const Curve& b) { return pointwise(Pointwise::add, a, b); }
inline Curve minimum(const Curve& a, const Curve& b) { return pointwise(Pointwise::min, a, b); }
inline Curve maximum(const Curve& a, const Curve& b) { return pointwise(Pointwise::max, a, b); }

/// k * f. Eventually infinite curves need k > 0.
Curve scale(const Curve& f, const Rational& k);

/// t -> f(t + s), s >= 0.
Curve shift_left(const Curve& f, const Rational& s);

/// (a (x) b)(t) = inf_{0 <= s <= t} a(t - s) + b(s).
Curve convolve(const Curve& a, const Curve& b);

/// (a (/) b)(t) = sup_{s >= 0} a(t + s) - b(s), the exact supremum at every t,
/// including t = 0. Throws UnboundedError when rate(a) > rate(b).
Curve deconvolve(const Curve& a, const Curve& b);

/// t -> sup_{0 <= u <= t} f(u).
Curve non_decreasing_closure(const Curve& f);

/// t -> f(g(t)) with g non-decreasing. Arguments below zero evaluate f at 0,
/// so t - x time transforms may start negative.
Curve compose(const Curve& f, const Curve& g);

/// inf{u >= 0 : f(u) >= y} for non-decreasing f; nullopt if f never reaches y.
std::optional<Rational> lower_pseudo_inverse(const Curve& f, const Rational& y);

/// sup_s inf{tau >= 0 : alpha(s) <= beta(s + tau)}.
Rational horizontal_deviation(const Curve& alpha, const Curve& beta);

/// sup_s alpha(s) - beta(s).
Rational vertical_deviation(const Curve& alpha, const Curve& beta);

/// f(t) <= g(t) at every t in [0, horizon], exact.
bool dominated_on(const Curve& f, const Curve& g, const Rational& horizon);

/// Bounds of f(t) - rate(f) * t over t >= 0 (including one-sided limits).
struct AffineEnvelope {
  Rational lowest;
  Rational highest;
};
AffineEnvelope affine_envelope(const Curve& f);

}  // namespace tsnnc
