#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "tsnnc/rational.hpp"

namespace tsnnc {

/// Either a point {x0 == x1, value y} or an open segment (x0, x1) on which the
/// function equals y + slope * (t - x0). `y` is the right limit at x0.
struct Element {
  Rational x0;
  Rational x1;
  Rational y;
  Rational slope;

  static Element point(const Rational& x, const Rational& y) { return {x, x, y, Rational(0)}; }
  static Element segment(const Rational& x0, const Rational& x1, const Rational& y,
                         const Rational& slope) {
    return {x0, x1, y, slope};
  }

  bool is_point() const { return x0 == x1; }
  Rational at(const Rational& t) const { return y + slope * (t - x0); }
  /// Left limit at x1 (segments) or the value (points).
  Rational end_value() const { return y + slope * (x1 - x0); }

  friend bool operator==(const Element&, const Element&) = default;
};

/// A bit count or time that may be +infinity.
class Extended {
 public:
  Extended(const Rational& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static Extended infinity() {
    Extended e(Rational(0));
    e.infinite_ = true;
    return e;
  }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }
  /// Throws UnboundedError when infinite.
  const Rational& value() const;

  friend bool operator==(const Extended& a, const Extended& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator==(const Extended& a, const Rational& b) { return !a.infinite_ && a.value_ == b; }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.infinite_) return false;
    return b.infinite_ || a.value_ < b.value_;
  }
  friend bool operator<=(const Extended& a, const Extended& b) { return !(b < a); }
  friend std::ostream& operator<<(std::ostream& os, const Extended& e);

 private:
  Rational value_;
  bool infinite_ = false;
};

/// Piecewise-linear, ultimately pseudo-periodic function of time t >= 0.
///
/// The elements tile [0, T0 + d) alternating points and open segments, with a
/// point at T0. For t >= T0, value(t + d) = value(t) + c. A curve may instead
/// be eventually infinite: its elements then tile [0, X] and the value is +inf
/// for every t > X (the burst-delay family).
///
/// Curves are immutable values; every operation returns a new curve.
class Curve {
 public:
  /// Zero for all t.
  Curve();

  static Curve zero() { return Curve(); }
  /// a0 + slope * t, including at t = 0.
  static Curve affine(const Rational& a0, const Rational& slope);
  /// 0 at t = 0, b + r * t for t > 0.
  static Curve leaky_bucket(const Rational& burst, const Rational& rate);
  /// R * max(0, t - T).
  static Curve rate_latency(const Rational& rate, const Rational& latency);
  /// 0 on [0, T], +inf afterwards. Identity of min-plus convolution for T = 0.
  static Curve burst_delay(const Rational& latency);
  /// height * max(0, ceil((t - offset) / period)): left-continuous steps.
  static Curve staircase(const Rational& height, const Rational& period,
                         const Rational& offset = Rational(0));

  /// Builds from an explicit tiling of [0, T0 + d). Validates the tiling.
  static Curve from_elements(std::vector<Element> elements, const Rational& period_start,
                             const Rational& period_length, const Rational& period_increment);
  /// Builds an eventually infinite curve from a tiling of [0, X].
  static Curve finite_then_infinite(std::vector<Element> elements, const Rational& infinite_after);

  /// Value at t. Throws DomainError for t < 0. Points take precedence over
  /// segment limits at breakpoints.
  Extended operator()(const Rational& t) const;
  /// Finite value at t; throws UnboundedError past the infinite marker.
  Rational value(const Rational& t) const;
  Extended right_limit(const Rational& t) const;
  /// Requires t > 0.
  Extended left_limit(const Rational& t) const;

  const std::vector<Element>& elements() const { return elements_; }
  const Rational& period_start() const { return period_start_; }
  const Rational& period_length() const { return period_length_; }
  const Rational& period_increment() const { return period_increment_; }
  bool eventually_infinite() const { return infinite_after_.has_value(); }
  /// X for eventually infinite curves.
  const Rational& infinite_after() const { return *infinite_after_; }
  /// Long-run growth rate c / d. Meaningless for eventually infinite curves.
  Rational rate() const { return period_increment_ / period_length_; }
  /// End of the explicitly stored tiling: T0 + d, or X.
  Rational stored_horizon() const;

  /// True when the curve is affine on [T0, inf).
  bool has_linear_tail() const;
  bool is_non_decreasing() const;

  /// Elements covering [0, horizon], ending with a point at `horizon`.
  /// For eventually infinite curves the cover stops at min(horizon, X).
  std::vector<Element> unroll(const Rational& horizon) const;

  /// Same function, periodic part re-expressed with start `start` and length
  /// `length`. `start` must be >= T0 and `length` a multiple of d unless the
  /// tail is linear.
  Curve retimed(const Rational& start, const Rational& length) const;

  /// Semantic equality: same value at every t >= 0.
  friend bool operator==(const Curve& a, const Curve& b);
  friend std::ostream& operator<<(std::ostream& os, const Curve& c);

 private:
  struct Raw {};
  Curve(Raw, std::vector<Element> elements, Rational t0, Rational d, Rational c,
        std::optional<Rational> infinite_after);

  void canonicalize();
  size_t locate(const Rational& t) const;
  Rational reduce(const Rational& t, Integer& periods) const;

  std::vector<Element> elements_;
  Rational period_start_;
  Rational period_length_;
  Rational period_increment_;
  std::optional<Rational> infinite_after_;

  friend class CurveBuilder;
};

/// Internal construction path used by the operators: takes an arbitrary
/// element cover of [0, H] with H >= T0 + d and canonicalizes.
class CurveBuilder {
 public:
  static Curve periodic(std::vector<Element> cover, const Rational& t0, const Rational& d,
                        const Rational& c);
  static Curve eventually_infinite(std::vector<Element> cover, const Rational& x);
};

}  // namespace tsnnc
