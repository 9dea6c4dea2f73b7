#include "tsnnc/curve.hpp"

#include <algorithm>
#include <sstream>

#include "pwl.hpp"
#include "tsnnc/errors.hpp"

namespace tsnnc {

const Rational& Extended::value() const {
  if (infinite_) throw UnboundedError("value is infinite");
  return value_;
}

std::ostream& operator<<(std::ostream& os, const Extended& e) {
  if (e.infinite_) return os << "+inf";
  return os << to_exact_string(e.value_);
}

namespace {

// Inserts a point at x when a segment covers x in its interior.
std::vector<Element> split_at(std::vector<Element> elems, const Rational& x) {
  for (size_t i = 0; i < elems.size(); ++i) {
    const Element e = elems[i];
    if (!e.is_point() && e.x0 < x && x < e.x1) {
      Rational v = e.at(x);
      elems[i] = Element::segment(e.x0, x, e.y, e.slope);
      elems.insert(elems.begin() + static_cast<long>(i) + 1,
                   {Element::point(x, v), Element::segment(x, e.x1, v, e.slope)});
      break;
    }
  }
  return elems;
}

void check_tiling(const std::vector<Element>& elems, const Rational& end, bool closed_end) {
  auto fail = [](const std::string& what) { throw std::logic_error("invalid curve tiling: " + what); };
  if (elems.empty() || !elems.front().is_point() || elems.front().x0 != 0) fail("must start with a point at 0");
  for (size_t i = 1; i < elems.size(); ++i) {
    const auto& prev = elems[i - 1];
    const auto& cur = elems[i];
    if (prev.is_point() == cur.is_point()) fail("points and segments must alternate");
    if (cur.is_point() ? cur.x0 != prev.x1 : cur.x0 != prev.x0) fail("gap between elements");
    if (!cur.is_point() && !(cur.x0 < cur.x1)) fail("empty segment");
  }
  const auto& last = elems.back();
  if (closed_end) {
    if (!last.is_point() || last.x0 != end) fail("must end with a point at the horizon");
  } else if (last.is_point() || last.x1 != end) {
    fail("must end with a segment reaching the horizon");
  }
}

}  // namespace

Curve::Curve(Raw, std::vector<Element> elements, Rational t0, Rational d, Rational c,
             std::optional<Rational> infinite_after)
    : elements_(std::move(elements)),
      period_start_(std::move(t0)),
      period_length_(std::move(d)),
      period_increment_(std::move(c)),
      infinite_after_(std::move(infinite_after)) {}

Curve::Curve()
    : elements_{Element::point(0, 0), Element::segment(0, 1, 0, 0)},
      period_start_(0),
      period_length_(1),
      period_increment_(0) {}

Curve Curve::affine(const Rational& a0, const Rational& slope) {
  return Curve(Raw{}, {Element::point(0, a0), Element::segment(0, 1, a0, slope)}, 0, 1, slope,
               std::nullopt);
}

Curve Curve::leaky_bucket(const Rational& burst, const Rational& rate) {
  if (burst < 0 || rate < 0) throw ParameterError("leaky bucket needs burst >= 0 and rate >= 0");
  if (burst == 0) return affine(0, rate);
  return Curve(Raw{},
               {Element::point(0, 0), Element::segment(0, 1, burst, rate),
                Element::point(1, burst + rate), Element::segment(1, 2, burst + rate, rate)},
               1, 1, rate, std::nullopt);
}

Curve Curve::rate_latency(const Rational& rate, const Rational& latency) {
  if (rate < 0 || latency < 0) throw ParameterError("rate-latency needs rate >= 0 and latency >= 0");
  if (latency == 0) return affine(0, rate);
  return Curve(Raw{},
               {Element::point(0, 0), Element::segment(0, latency, 0, 0), Element::point(latency, 0),
                Element::segment(latency, latency + 1, 0, rate)},
               latency, 1, rate, std::nullopt);
}

Curve Curve::burst_delay(const Rational& latency) {
  if (latency < 0) throw ParameterError("burst-delay needs latency >= 0");
  std::vector<Element> elems{Element::point(0, 0)};
  if (latency > 0) {
    elems.push_back(Element::segment(0, latency, 0, 0));
    elems.push_back(Element::point(latency, 0));
  }
  return Curve(Raw{}, std::move(elems), latency, 1, 0, latency);
}

Curve Curve::staircase(const Rational& height, const Rational& period, const Rational& offset) {
  if (height < 0 || period <= 0 || offset < 0) {
    throw ParameterError("staircase needs height >= 0, period > 0, offset >= 0");
  }
  std::vector<Element> elems{Element::point(0, 0)};
  if (offset > 0) {
    elems.push_back(Element::segment(0, offset, 0, 0));
    elems.push_back(Element::point(offset, 0));
  }
  elems.push_back(Element::segment(offset, offset + period, height, 0));
  Curve c(Raw{}, std::move(elems), offset, period, height, std::nullopt);
  c.canonicalize();
  return c;
}

Curve Curve::from_elements(std::vector<Element> elements, const Rational& period_start,
                           const Rational& period_length, const Rational& period_increment) {
  if (period_start < 0 || period_length <= 0) {
    throw ParameterError("periodic part needs T0 >= 0 and d > 0");
  }
  try {
    check_tiling(elements, period_start + period_length, false);
  } catch (const std::logic_error& e) {
    throw ParameterError(e.what());
  }
  Curve c(Raw{}, split_at(std::move(elements), period_start), period_start, period_length,
          period_increment, std::nullopt);
  c.canonicalize();
  return c;
}

Curve Curve::finite_then_infinite(std::vector<Element> elements, const Rational& infinite_after) {
  try {
    check_tiling(elements, infinite_after, true);
  } catch (const std::logic_error& e) {
    throw ParameterError(e.what());
  }
  Curve c(Raw{}, pwl::simplify(elements), infinite_after, 1, 0, infinite_after);
  return c;
}

Rational Curve::stored_horizon() const {
  if (infinite_after_) return *infinite_after_;
  return period_start_ + period_length_;
}

size_t Curve::locate(const Rational& t) const {
  auto it = std::upper_bound(elements_.begin(), elements_.end(), t,
                             [](const Rational& v, const Element& e) { return v < e.x0; });
  size_t idx = static_cast<size_t>(it - elements_.begin()) - 1;
  if (!elements_[idx].is_point() && elements_[idx].x0 == t && idx > 0) --idx;
  return idx;
}

Rational Curve::reduce(const Rational& t, Integer& periods) const {
  periods = 0;
  if (infinite_after_ || t < period_start_ + period_length_) return t;
  periods = floor_div((t - period_start_) / period_length_);
  return t - Rational(periods) * period_length_;
}

Extended Curve::operator()(const Rational& t) const {
  if (t < 0) throw DomainError("curve evaluated at negative time");
  if (infinite_after_ && t > *infinite_after_) return Extended::infinity();
  Integer k;
  Rational r = reduce(t, k);
  const auto& e = elements_[locate(r)];
  return Extended(e.at(r) + Rational(k) * period_increment_);
}

Rational Curve::value(const Rational& t) const { return (*this)(t).value(); }

Extended Curve::right_limit(const Rational& t) const {
  if (t < 0) throw DomainError("curve evaluated at negative time");
  if (infinite_after_ && t >= *infinite_after_) return Extended::infinity();
  Integer k;
  Rational r = reduce(t, k);
  auto it = std::upper_bound(elements_.begin(), elements_.end(), r,
                             [](const Rational& v, const Element& e) { return v < e.x0; });
  const auto& e = *(it - 1);
  return Extended(e.at(r) + Rational(k) * period_increment_);
}

Extended Curve::left_limit(const Rational& t) const {
  if (t <= 0) throw DomainError("left limit needs t > 0");
  if (infinite_after_ && t > *infinite_after_) return Extended::infinity();
  Integer k = 0;
  Rational r = t;
  if (!infinite_after_ && t > period_start_ + period_length_) {
    k = ceil_div((t - period_start_) / period_length_) - 1;
    r = t - Rational(k) * period_length_;
  }
  auto it = std::lower_bound(elements_.begin(), elements_.end(), r,
                             [](const Element& e, const Rational& v) { return e.x0 < v; });
  const auto& e = *(it - 1);
  return Extended(e.at(r) + Rational(k) * period_increment_);
}

std::vector<Element> Curve::unroll(const Rational& horizon) const {
  if (horizon < 0) throw DomainError("negative unroll horizon");
  if (infinite_after_) return pwl::clip(elements_, 0, min_of(horizon, *infinite_after_));
  std::vector<Element> out;
  for (const auto& e : elements_) {
    if (e.x0 >= period_start_ || e.x0 >= horizon) break;
    if (e.is_point()) {
      out.push_back(e);
    } else {
      out.push_back(Element::segment(e.x0, min_of(min_of(e.x1, period_start_), horizon), e.y, e.slope));
    }
  }
  if (period_start_ < horizon) {
    const auto pattern = pwl::clip(elements_, period_start_, period_start_ + period_length_);
    for (Integer k = 0;; ++k) {
      const Rational shift = Rational(k) * period_length_;
      const Rational lift = Rational(k) * period_increment_;
      if (period_start_ + shift >= horizon) break;
      for (const auto& e : pattern) {
        const Rational x0 = e.x0 + shift;
        if (x0 >= horizon) break;
        if (e.is_point()) {
          out.push_back(Element::point(x0, e.y + lift));
        } else {
          out.push_back(Element::segment(x0, min_of(e.x1 + shift, horizon), e.y + lift, e.slope));
        }
      }
    }
  }
  out.push_back(Element::point(horizon, value(horizon)));
  return pwl::simplify(out);
}

bool Curve::has_linear_tail() const {
  if (infinite_after_) return false;
  const Rational rho = rate();
  const auto tail = pwl::clip(elements_, period_start_, period_start_ + period_length_);
  for (size_t i = 0; i < tail.size(); ++i) {
    const auto& e = tail[i];
    if (!e.is_point()) {
      if (e.slope != rho) return false;
      continue;
    }
    if (i > 0 && tail[i - 1].end_value() != e.y) return false;
    if (i + 1 < tail.size() && tail[i + 1].y != e.y) return false;
  }
  return true;
}

bool Curve::is_non_decreasing() const {
  for (size_t i = 0; i < elements_.size(); ++i) {
    const auto& e = elements_[i];
    if (!e.is_point()) {
      if (e.slope < 0) return false;
      continue;
    }
    if (i > 0 && elements_[i - 1].end_value() > e.y) return false;
    if (i + 1 < elements_.size() && elements_[i + 1].y < e.y) return false;
  }
  if (infinite_after_) return true;
  if (period_increment_ < 0) return false;
  // Across the wrap from T0 + d back to the periodic start.
  return elements_.back().end_value() <= value(period_start_ + period_length_);
}

Curve Curve::retimed(const Rational& start, const Rational& length) const {
  if (infinite_after_) return *this;
  if (start < period_start_ || length <= 0) throw ParameterError("invalid retiming");
  const Rational q = length / period_length_;
  if (!has_linear_tail() && q.get_den() != 1) throw ParameterError("retiming length is not a multiple of the period");
  auto cover = unroll(start + length);
  cover.pop_back();
  return Curve(Raw{}, split_at(std::move(cover), start), start, length, rate() * length, std::nullopt);
}

namespace {

// Breakpoints of c inside [lo, hi] (point positions of its unrolled cover).
std::vector<Rational> cover_points(const Curve& c, const Rational& lo, const Rational& hi) {
  return pwl::breakpoints(c.unroll(hi), lo, hi);
}

}  // namespace

void Curve::canonicalize() {
  if (infinite_after_) {
    elements_ = pwl::simplify(elements_);
    return;
  }
  elements_ = pwl::simplify(elements_);
  const Rational& d = period_length_;

  // f(t + shift) == f(t) + lift on [lo, hi], given no breakpoints of either
  // side strictly inside consecutive candidates.
  auto agrees = [this](const std::vector<Rational>& xs, const Rational& shift, const Rational& lift) {
    for (size_t i = 0; i < xs.size(); ++i) {
      if ((*this)(xs[i] + shift).value() != (*this)(xs[i]).value() + lift) return false;
      if (i + 1 < xs.size()) {
        const Rational step = (xs[i + 1] - xs[i]) / 3;
        for (int j = 1; j <= 2; ++j) {
          const Rational t = xs[i] + step * j;
          if ((*this)(t + shift).value() != (*this)(t).value() + lift) return false;
        }
      }
    }
    return true;
  };

  auto candidates = [this](const Rational& lo, const Rational& hi, const Rational& shift) {
    auto xs = cover_points(*this, lo, hi);
    for (const auto& x : cover_points(*this, lo + shift, hi + shift)) xs.push_back(x - shift);
    xs.push_back(lo);
    xs.push_back(hi);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
  };

  // Shorter period.
  if (!has_linear_tail()) {
    size_t n = 0;
    for (const auto& e : elements_) {
      if (e.is_point() && e.x0 >= period_start_) ++n;
    }
    for (size_t k = n; k >= 2; --k) {
      if (n % k != 0) continue;
      const Rational dk = d / static_cast<unsigned long>(k);
      const Rational ck = period_increment_ / static_cast<unsigned long>(k);
      if (agrees(candidates(period_start_, period_start_ + d - dk, dk), dk, ck)) {
        period_length_ = dk;
        period_increment_ = ck;
        break;
      }
    }
  }

  // Earlier start of the periodic part.
  {
    auto xs = candidates(0, period_start_, period_length_);
    Rational cur = period_start_;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
      if (*it >= cur) continue;
      if (!agrees({*it, cur}, period_length_, period_increment_)) break;
      cur = *it;
    }
    period_start_ = cur;
  }

  auto cover = unroll(period_start_ + period_length_);
  cover.pop_back();
  elements_ = split_at(std::move(cover), period_start_);
}

Curve CurveBuilder::periodic(std::vector<Element> cover, const Rational& t0, const Rational& d,
                             const Rational& c) {
  const Rational end = t0 + d;
  std::vector<Element> elems;
  for (auto& e : pwl::simplify(cover)) {
    if (e.x0 >= end) break;
    if (e.is_point()) {
      elems.push_back(e);
    } else {
      elems.push_back(Element::segment(e.x0, min_of(e.x1, end), e.y, e.slope));
    }
  }
  check_tiling(elems, end, false);
  Curve out(Curve::Raw{}, split_at(std::move(elems), t0), t0, d, c, std::nullopt);
  out.canonicalize();
  return out;
}

Curve CurveBuilder::eventually_infinite(std::vector<Element> cover, const Rational& x) {
  auto elems = pwl::clip(pwl::simplify(cover), 0, x);
  check_tiling(elems, x, true);
  return Curve(Curve::Raw{}, pwl::simplify(elems), x, 1, 0, x);
}

namespace {

Rational common_period(const Curve& a, const Curve& b) {
  if (a.has_linear_tail()) return b.period_length();
  if (b.has_linear_tail()) return a.period_length();
  return lcm(a.period_length(), b.period_length());
}

bool agree_on(const Curve& a, const Curve& b, const Rational& horizon) {
  auto xs = pwl::breakpoints(a.unroll(horizon), 0, horizon);
  auto ys = pwl::breakpoints(b.unroll(horizon), 0, horizon);
  xs.insert(xs.end(), ys.begin(), ys.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (size_t i = 0; i < xs.size(); ++i) {
    if (!(a(xs[i]) == b(xs[i]))) return false;
    if (i + 1 < xs.size()) {
      const Rational step = (xs[i + 1] - xs[i]) / 3;
      for (int j = 1; j <= 2; ++j) {
        const Rational t = xs[i] + step * j;
        if (!(a(t) == b(t))) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool operator==(const Curve& a, const Curve& b) {
  if (a.eventually_infinite() != b.eventually_infinite()) return false;
  if (a.eventually_infinite()) {
    return a.infinite_after() == b.infinite_after() && agree_on(a, b, a.infinite_after());
  }
  if (a.rate() != b.rate()) return false;
  const Rational horizon = max_of(a.period_start(), b.period_start()) + common_period(a, b);
  return agree_on(a, b, horizon);
}

std::ostream& operator<<(std::ostream& os, const Curve& c) {
  os << "Curve{";
  for (const auto& e : c.elements()) {
    if (e.is_point()) {
      os << "[" << to_exact_string(e.x0) << ": " << to_exact_string(e.y) << "] ";
    } else {
      os << "(" << to_exact_string(e.x0) << "," << to_exact_string(e.x1) << "; "
         << to_exact_string(e.y) << " +" << to_exact_string(e.slope) << ") ";
    }
  }
  if (c.eventually_infinite()) {
    os << "inf after " << to_exact_string(c.infinite_after());
  } else {
    os << "T0=" << to_exact_string(c.period_start()) << " d=" << to_exact_string(c.period_length())
       << " c=" << to_exact_string(c.period_increment());
  }
  return os << "}";
}

}  // namespace tsnnc
