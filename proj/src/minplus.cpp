#include "tsnnc/minplus.hpp"

#include <algorithm>

#include "pwl.hpp"
#include "tsnnc/errors.hpp"

namespace tsnnc {

using pwl::Pick;
using pwl::Pwl;

namespace {

Rational common_period(const Curve& a, const Curve& b) {
  if (a.has_linear_tail()) return b.period_length();
  if (b.has_linear_tail()) return a.period_length();
  return lcm(a.period_length(), b.period_length());
}

std::vector<Rational> merged_breakpoints(const Pwl& a, const Pwl& b, const Rational& lo,
                                         const Rational& hi) {
  auto xs = pwl::breakpoints(a, lo, hi);
  auto ys = pwl::breakpoints(b, lo, hi);
  xs.insert(xs.end(), ys.begin(), ys.end());
  xs.push_back(lo);
  xs.push_back(hi);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

void require_finite(const Curve& f, const char* op) {
  if (f.eventually_infinite()) throw PreconditionError(std::string(op) + " needs a finite curve");
}

}  // namespace

AffineEnvelope affine_envelope(const Curve& f) {
  require_finite(f, "affine envelope");
  const Rational rho = f.rate();
  const auto& elems = f.elements();
  Rational lo = elems.front().y;
  Rational hi = lo;
  auto take = [&](const Rational& v) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  };
  for (const auto& e : elems) {
    take(e.y - rho * e.x0);
    if (!e.is_point()) take(e.end_value() - rho * e.x1);
  }
  return {lo, hi};
}

Curve pointwise(Pointwise mode, const Curve& a, const Curve& b) {
  const bool ia = a.eventually_infinite();
  const bool ib = b.eventually_infinite();
  if (ia || ib) {
    if (mode == Pointwise::add || (mode == Pointwise::max)) {
      Rational x = ia && ib ? min_of(a.infinite_after(), b.infinite_after())
                            : (ia ? a.infinite_after() : b.infinite_after());
      Pwl cover = mode == Pointwise::add ? pwl::add(a.unroll(x), b.unroll(x))
                                         : pwl::merge(a.unroll(x), b.unroll(x), Pick::max);
      return CurveBuilder::eventually_infinite(std::move(cover), x);
    }
    if (ia && ib) {
      Rational x = max_of(a.infinite_after(), b.infinite_after());
      return CurveBuilder::eventually_infinite(pwl::merge(a.unroll(x), b.unroll(x), Pick::min), x);
    }
    const Curve& fin = ia ? b : a;
    const Curve& inf = ia ? a : b;
    // At the cut-off itself the finite part of `inf` may still win.
    Rational t0 = fin.period_start();
    if (t0 <= inf.infinite_after()) t0 = inf.infinite_after() + fin.period_length();
    Rational h = t0 + fin.period_length();
    return CurveBuilder::periodic(pwl::merge(fin.unroll(h), inf.unroll(h), Pick::min), t0,
                                  fin.period_length(), fin.period_increment());
  }

  const Rational ra = a.rate();
  const Rational rb = b.rate();
  Rational t0 = max_of(a.period_start(), b.period_start());
  if (mode == Pointwise::add || ra == rb) {
    const Rational d = common_period(a, b);
    const Rational h = t0 + d;
    Pwl cover = mode == Pointwise::add
                    ? pwl::add(a.unroll(h), b.unroll(h))
                    : pwl::merge(a.unroll(h), b.unroll(h), mode == Pointwise::min ? Pick::min : Pick::max);
    return CurveBuilder::periodic(std::move(cover), t0, d, (ra + rb) * d / (mode == Pointwise::add ? 1 : 2));
  }
  // Different rates: eventually one curve wins for good.
  const bool a_slow = ra < rb;
  const Curve& slow = a_slow ? a : b;
  const Curve& fast = a_slow ? b : a;
  const auto es = affine_envelope(slow);
  const auto ef = affine_envelope(fast);
  Rational cross;
  const Curve* winner;
  if (mode == Pointwise::min) {
    // slow(t) <= rho_s t + hi_s <= rho_f t + lo_f <= fast(t)
    cross = (es.highest - ef.lowest) / (fast.rate() - slow.rate());
    winner = &slow;
  } else {
    cross = (es.highest - ef.lowest) / (fast.rate() - slow.rate());
    winner = &fast;
  }
  t0 = max_of(max_of(t0, cross), winner->period_start());
  const Rational h = t0 + winner->period_length();
  return CurveBuilder::periodic(
      pwl::merge(a.unroll(h), b.unroll(h), mode == Pointwise::min ? Pick::min : Pick::max), t0,
      winner->period_length(), winner->period_increment());
}

Curve scale(const Curve& f, const Rational& k) {
  if (f.eventually_infinite() && k <= 0) throw ParameterError("cannot scale an infinite curve by k <= 0");
  if (!f.eventually_infinite() && k == 0) return Curve::zero();
  std::vector<Element> elems;
  elems.reserve(f.elements().size());
  for (const auto& e : f.elements()) elems.push_back({e.x0, e.x1, e.y * k, e.slope * k});
  if (f.eventually_infinite()) return CurveBuilder::eventually_infinite(std::move(elems), f.infinite_after());
  return CurveBuilder::periodic(std::move(elems), f.period_start(), f.period_length(),
                                f.period_increment() * k);
}

Curve shift_left(const Curve& f, const Rational& s) {
  if (s < 0) throw ParameterError("shift must be non-negative");
  if (s == 0) return f;
  auto shifted = [&](const Rational& h) {
    Pwl out;
    for (const auto& e : pwl::clip(f.unroll(h + s), s, h + s)) {
      out.push_back({e.x0 - s, e.x1 - s, e.y, e.slope});
    }
    return out;
  };
  if (f.eventually_infinite()) {
    if (f.infinite_after() < s) throw PreconditionError("shift moves past the finite part of the curve");
    const Rational x = f.infinite_after() - s;
    return CurveBuilder::eventually_infinite(shifted(x), x);
  }
  const Rational t0 = max_of(f.period_start() - s, Rational(0));
  const Rational h = t0 + f.period_length();
  return CurveBuilder::periodic(shifted(h), t0, f.period_length(), f.period_increment());
}

namespace {

// (e1 (x) e2) restricted to [0, h].
void convolve_elements(const Element& e1, const Element& e2, const Rational& h, std::vector<Pwl>& out) {
  const Rational start = e1.x0 + e2.x0;
  if (start > h) return;
  Pwl piece;
  if (e1.is_point() && e2.is_point()) {
    piece.push_back(Element::point(start, e1.y + e2.y));
  } else if (e1.is_point() || e2.is_point()) {
    const Element& p = e1.is_point() ? e1 : e2;
    const Element& s = e1.is_point() ? e2 : e1;
    piece.push_back(Element::segment(start, s.x1 + p.x0, s.y + p.y, s.slope));
  } else {
    const bool first_is_1 = e1.slope <= e2.slope;
    const Element& lo = first_is_1 ? e1 : e2;
    const Element& hi = first_is_1 ? e2 : e1;
    const Rational mid = start + (lo.x1 - lo.x0);
    const Rational vmid = e1.y + e2.y + lo.slope * (lo.x1 - lo.x0);
    piece.push_back(Element::segment(start, mid, e1.y + e2.y, lo.slope));
    piece.push_back(Element::point(mid, vmid));
    piece.push_back(Element::segment(mid, mid + (hi.x1 - hi.x0), vmid, hi.slope));
  }
  out.push_back(pwl::clip(piece, 0, h));
}

Pwl finite_convolution(const Pwl& a, const Pwl& b, const Rational& h) {
  std::vector<Pwl> parts;
  parts.reserve(a.size() * b.size());
  for (const auto& e2 : b) {
    for (const auto& e1 : a) convolve_elements(e1, e2, h, parts);
  }
  return pwl::envelope(std::move(parts), Pick::min);
}

// t -> sup over s of (e1 at t + s) - (e2 at s), restricted to t in [0, h].
void deconvolve_elements(const Element& e1, const Element& e2, const Rational& h, std::vector<Pwl>& out) {
  Pwl piece;
  if (e1.is_point() && e2.is_point()) {
    piece.push_back(Element::point(e1.x0 - e2.x0, e1.y - e2.y));
  } else if (e1.is_point()) {
    // t = x1 - s for s in (a, b): slope of -e2 seen backwards.
    piece.push_back(Element::segment(e1.x0 - e2.x1, e1.x0 - e2.x0, e1.y - e2.end_value(), e2.slope));
  } else if (e2.is_point()) {
    piece.push_back(Element::segment(e1.x0 - e2.x0, e1.x1 - e2.x0, e1.y - e2.y, e1.slope));
  } else {
    const Rational lo = e1.x0 - e2.x1;
    const Rational hi = e1.x1 - e2.x0;
    Rational mid;
    Rational s1;
    Rational s2;
    Rational vlo;
    if (e1.slope >= e2.slope) {
      // s as large as possible
      mid = e1.x1 - e2.x1;
      s1 = e1.slope;
      s2 = e2.slope;
      vlo = e1.y - e2.end_value();
    } else {
      // s as small as possible
      mid = e1.x0 - e2.x0;
      s1 = e2.slope;
      s2 = e1.slope;
      vlo = e1.y - e2.end_value();
    }
    const Rational vmid = vlo + s1 * (mid - lo);
    if (lo < mid) piece.push_back(Element::segment(lo, mid, vlo, s1));
    if (lo < mid && mid < hi) piece.push_back(Element::point(mid, vmid));
    if (mid < hi) piece.push_back(Element::segment(mid, hi, vmid, s2));
  }
  if (piece.back().x1 < 0 || piece.front().x0 > h) return;
  auto clipped = pwl::clip(piece, 0, h);
  if (!clipped.empty()) out.push_back(std::move(clipped));
}

Pwl finite_deconvolution(const Pwl& a, const Pwl& b, const Rational& h) {
  std::vector<Pwl> parts;
  for (const auto& e2 : b) {
    for (const auto& e1 : a) {
      if (e1.x1 - e2.x0 < 0) continue;
      deconvolve_elements(e1, e2, h, parts);
    }
  }
  return pwl::envelope(std::move(parts), Pick::max);
}

// Range of s beyond which a(t - s) + b(s) (or a(t + s) - b(s)) cannot beat s = 0,
// when rate(a) < rate(b).
Rational split_bound(const Curve& a, const Curve& b) {
  const auto ea = affine_envelope(a);
  const auto eb = affine_envelope(b);
  Rational s = (ea.highest - ea.lowest + b.value(0) - eb.lowest) / (b.rate() - a.rate());
  return max_of(s, Rational(0));
}

}  // namespace

Curve convolve(const Curve& a, const Curve& b) {
  const bool ia = a.eventually_infinite();
  const bool ib = b.eventually_infinite();
  if (ia && ib) {
    const Rational x = a.infinite_after() + b.infinite_after();
    return CurveBuilder::eventually_infinite(
        finite_convolution(a.unroll(a.infinite_after()), b.unroll(b.infinite_after()), x), x);
  }
  if (ia || ib) {
    const Curve& fin = ia ? b : a;
    const Curve& inf = ia ? a : b;
    const Rational t0 = fin.period_start() + inf.infinite_after();
    const Rational h = t0 + fin.period_length();
    return CurveBuilder::periodic(finite_convolution(fin.unroll(h), inf.unroll(inf.infinite_after()), h), t0,
                                  fin.period_length(), fin.period_increment());
  }
  if (a.rate() == b.rate()) {
    const Rational d = common_period(a, b);
    const Rational t0 = a.period_start() + b.period_start() + d;
    const Rational h = t0 + d;
    return CurveBuilder::periodic(finite_convolution(a.unroll(h), b.unroll(h), h), t0, d, a.rate() * d);
  }
  const Curve& slow = a.rate() < b.rate() ? a : b;
  const Curve& fast = a.rate() < b.rate() ? b : a;
  const Rational reach = split_bound(slow, fast);
  const Rational t0 = slow.period_start() + reach;
  const Rational h = t0 + slow.period_length();
  return CurveBuilder::periodic(finite_convolution(slow.unroll(h), fast.unroll(min_of(reach, h)), h), t0,
                                slow.period_length(), slow.period_increment());
}

Curve deconvolve(const Curve& a, const Curve& b) {
  if (a.eventually_infinite()) throw UnboundedError("deconvolution of an eventually infinite curve");
  const Rational t0 = a.period_start();
  const Rational h = t0 + a.period_length();
  Rational reach;
  if (b.eventually_infinite()) {
    reach = b.infinite_after();
  } else if (a.rate() > b.rate()) {
    throw UnboundedError("deconvolution diverges: arrival rate " + to_decimal(a.rate()) +
                         " exceeds service rate " + to_decimal(b.rate()));
  } else if (a.rate() == b.rate()) {
    reach = max_of(a.period_start(), b.period_start()) + common_period(a, b);
  } else {
    reach = split_bound(a, b);
  }
  return CurveBuilder::periodic(finite_deconvolution(a.unroll(h + reach), b.unroll(reach), h), t0,
                                a.period_length(), a.period_increment());
}

Curve non_decreasing_closure(const Curve& f) {
  Rational t1;
  Rational c;
  Rational h;
  if (f.eventually_infinite()) {
    h = f.infinite_after();
  } else {
    c = f.period_increment();
    if (c > 0) {
      Rational top = f.elements().front().y;
      Rational bottom = f.value(f.period_start());
      for (const auto& e : f.elements()) {
        top = max_of(top, max_of(e.y, e.end_value()));
        if (e.x1 >= f.period_start()) {
          bottom = min_of(bottom, e.x0 >= f.period_start() ? min_of(e.y, e.end_value())
                                                           : e.end_value() < e.y ? e.end_value() : e.y);
          if (e.x0 < f.period_start()) bottom = min_of(bottom, e.at(f.period_start()));
        }
      }
      Integer k = ceil_div((top - bottom) / c);
      if (k < 0) k = 0;
      t1 = f.period_start() + Rational(k + 1) * f.period_length();
    } else {
      c = 0;
      t1 = f.period_start() + f.period_length();
    }
    h = t1 + f.period_length();
  }

  Pwl out;
  std::optional<Rational> best;
  for (const auto& e : f.unroll(h)) {
    if (e.is_point()) {
      best = best ? max_of(*best, e.y) : e.y;
      out.push_back(Element::point(e.x0, *best));
      continue;
    }
    const Rational& m = *best;
    if (e.slope <= 0) {
      const Rational level = max_of(m, e.y);
      out.push_back(Element::segment(e.x0, e.x1, level, 0));
      best = level;
    } else if (e.y >= m) {
      out.push_back(e);
      best = e.end_value();
    } else if (e.end_value() <= m) {
      out.push_back(Element::segment(e.x0, e.x1, m, 0));
    } else {
      const Rational xc = e.x0 + (m - e.y) / e.slope;
      out.push_back(Element::segment(e.x0, xc, m, 0));
      out.push_back(Element::point(xc, m));
      out.push_back(Element::segment(xc, e.x1, m, e.slope));
      best = e.end_value();
    }
  }
  if (f.eventually_infinite()) return CurveBuilder::eventually_infinite(std::move(out), h);
  return CurveBuilder::periodic(std::move(out), t1, f.period_length(), c);
}

Curve compose(const Curve& f, const Curve& g) {
  require_finite(f, "compose");
  require_finite(g, "compose");
  if (!g.is_non_decreasing()) {
    throw PreconditionError("compose needs a non-decreasing inner curve; apply the closure first");
  }
  Rational t1;
  Rational d;
  Rational c;
  const Rational cg = g.period_increment();
  if (cg == 0) {
    t1 = g.period_start();
    d = g.period_length();
    c = 0;
  } else {
    Integer k = ceil_div((f.period_start() - g.value(g.period_start())) / cg);
    if (k < 0) k = 0;
    t1 = g.period_start() + Rational(k) * g.period_length();
    if (f.has_linear_tail()) {
      d = g.period_length();
      c = f.rate() * cg;
    } else if (g.has_linear_tail()) {
      d = f.period_length() / g.rate();
      c = f.period_increment();
    } else {
      const Rational l = lcm(cg, f.period_length());
      d = (l / cg) * g.period_length();
      c = (l / f.period_length()) * f.period_increment();
    }
  }
  const Rational h = t1 + d;
  const Pwl inner = g.unroll(h);
  Rational umax = 0;
  for (const auto& e : inner) umax = max_of(umax, max_of(e.y, e.end_value()));
  const Pwl outer = f.unroll(umax);
  const Rational f0 = f.value(0);
  auto fval = [&](const Rational& u) -> Rational { return u <= 0 ? f0 : f.value(u); };

  Pwl out;
  for (const auto& e : inner) {
    if (e.is_point()) {
      out.push_back(Element::point(e.x0, fval(e.y)));
      continue;
    }
    if (e.slope == 0) {
      out.push_back(Element::segment(e.x0, e.x1, fval(e.y), 0));
      continue;
    }
    const Rational y1 = e.end_value();
    auto to_time = [&](const Rational& u) -> Rational { return e.x0 + (u - e.y) / e.slope; };
    Rational ulo = e.y;
    if (ulo < 0) {
      // negative arguments: constant f(0)
      const Rational tz = min_of(to_time(0), e.x1);
      out.push_back(Element::segment(e.x0, tz, f0, 0));
      if (tz == e.x1) continue;
      out.push_back(Element::point(tz, f0));
      ulo = 0;
    }
    auto it = std::partition_point(outer.begin(), outer.end(),
                                   [&](const Element& o) { return o.x1 <= ulo && !(o.is_point() && o.x0 == ulo); });
    bool first = true;
    for (; it != outer.end() && it->x0 < y1; ++it) {
      const Element& o = *it;
      if (o.is_point()) {
        if (o.x0 <= ulo) continue;
        out.push_back(Element::point(to_time(o.x0), o.y));
        continue;
      }
      const Rational a = max_of(o.x0, ulo);
      const Rational b = min_of(o.x1, y1);
      if (!(a < b)) continue;
      if (!first && a > o.x0) {}
      out.push_back(Element::segment(to_time(a), to_time(b), o.at(a), o.slope * e.slope));
      first = false;
    }
  }
  return CurveBuilder::periodic(std::move(out), t1, d, c);
}

std::optional<Rational> lower_pseudo_inverse(const Curve& f, const Rational& y) {
  const auto& elems = f.elements();
  if (y <= elems.front().y) return Rational(0);
  auto top = [](const Element& e) -> Rational { return e.is_point() ? e.y : e.end_value(); };
  auto search = [&](const Rational& target, const Rational& from) -> std::optional<Rational> {
    auto it = std::partition_point(elems.begin(), elems.end(),
                                   [&](const Element& e) { return e.x1 < from || top(e) < target; });
    if (it == elems.end()) return std::nullopt;
    if (it->is_point()) return it->x0;
    if (it->y >= target) return max_of(it->x0, from);
    return max_of(it->x0 + (target - it->y) / it->slope, from);
  };
  if (auto u = search(y, 0)) return u;
  if (f.eventually_infinite()) return f.infinite_after();
  const Rational& c = f.period_increment();
  if (c <= 0) return std::nullopt;
  const Rational t0 = f.period_start();
  const Rational d = f.period_length();
  const Rational peak = f.left_limit(t0 + d).value();
  Integer k = ceil_div((y - peak) / c);
  if (k < 1) k = 1;
  for (int tries = 0; tries < 3; ++tries, ++k) {
    if (auto u = search(y - Rational(k) * c, t0)) return *u + Rational(k) * d;
  }
  throw std::logic_error("pseudo-inverse search failed");
}

Rational vertical_deviation(const Curve& alpha, const Curve& beta) {
  Rational h;
  if (alpha.eventually_infinite()) {
    if (!beta.eventually_infinite() || alpha.infinite_after() < beta.infinite_after()) {
      throw UnboundedError("backlog is unbounded: arrival curve is infinite");
    }
    h = beta.infinite_after();
  } else if (beta.eventually_infinite()) {
    h = beta.infinite_after();
  } else if (alpha.rate() > beta.rate()) {
    throw UnboundedError("backlog is unbounded: arrival rate " + to_decimal(alpha.rate()) +
                         " exceeds service rate " + to_decimal(beta.rate()));
  } else if (alpha.rate() == beta.rate()) {
    h = max_of(alpha.period_start(), beta.period_start()) + common_period(alpha, beta);
  } else {
    const auto ea = affine_envelope(alpha);
    const auto eb = affine_envelope(beta);
    h = (ea.highest - eb.lowest - (alpha.value(0) - beta.value(0))) / (beta.rate() - alpha.rate());
    h = max_of(h, Rational(0));
  }
  const auto xs = merged_breakpoints(alpha.unroll(h), beta.unroll(h), 0, h);
  Rational best = alpha.value(0) - beta.value(0);
  for (const auto& x : xs) {
    best = max_of(best, alpha.value(x) - beta.value(x));
    if (x > 0) best = max_of(best, alpha.left_limit(x).value() - beta.left_limit(x).value());
    if (x < h) best = max_of(best, alpha.right_limit(x).value() - beta.right_limit(x).value());
  }
  return best;
}

Rational horizontal_deviation(const Curve& alpha, const Curve& beta) {
  if (alpha.eventually_infinite()) throw UnboundedError("delay is unbounded: arrival curve is infinite");
  Rational h;
  if (beta.eventually_infinite()) {
    h = beta.infinite_after();
  } else if (alpha.rate() > beta.rate()) {
    throw UnboundedError("delay is unbounded: arrival rate " + to_decimal(alpha.rate()) +
                         " exceeds service rate " + to_decimal(beta.rate()));
  } else if (alpha.rate() < beta.rate()) {
    const auto ea = affine_envelope(alpha);
    const auto eb = affine_envelope(beta);
    h = max_of((ea.highest - eb.lowest) / (beta.rate() - alpha.rate()), Rational(0));
  } else if (alpha.period_increment() == 0) {
    h = alpha.period_start() + alpha.period_length();
  } else {
    Rational peak = beta.value(0);
    for (const auto& e : beta.elements()) peak = max_of(peak, max_of(e.y, e.end_value()));
    Integer k = floor_div((peak - alpha.value(alpha.period_start())) / alpha.period_increment()) + 1;
    if (k < 0) k = 0;
    h = alpha.period_start() + Rational(k) * alpha.period_length() + common_period(alpha, beta);
  }

  const Pwl arr = alpha.unroll(h);
  Rational ymax = alpha.value(h);
  if (h > 0) ymax = max_of(ymax, alpha.right_limit(h).value());
  auto reach = lower_pseudo_inverse(beta, ymax);
  if (!reach) throw UnboundedError("delay is unbounded: service curve never reaches the arrival curve");

  std::vector<Rational> levels;
  for (const auto& e : beta.unroll(*reach)) {
    levels.push_back(e.y);
    if (!e.is_point()) levels.push_back(e.end_value());
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<Rational> cand{Rational(0), h};
  for (const auto& e : arr) {
    cand.push_back(e.x0);
    if (e.is_point() || e.slope <= 0) continue;
    cand.push_back(e.x1);
    const Rational y1 = e.end_value();
    for (auto it = std::upper_bound(levels.begin(), levels.end(), e.y); it != levels.end() && *it < y1; ++it) {
      cand.push_back(e.x0 + (*it - e.y) / e.slope);
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  while (!cand.empty() && cand.back() > h) cand.pop_back();

  auto inner = [&](const Rational& s) -> Rational {
    auto u = lower_pseudo_inverse(beta, alpha.value(s));
    if (!u) throw UnboundedError("delay is unbounded");
    return *u - s;
  };
  Rational best = 0;
  for (size_t i = 0; i < cand.size(); ++i) {
    best = max_of(best, inner(cand[i]));
    if (i + 1 < cand.size()) {
      const Rational step = (cand[i + 1] - cand[i]) / 3;
      const Rational p = cand[i] + step;
      const Rational q = p + step;
      const Rational vp = inner(p);
      const Rational vq = inner(q);
      const Rational slope = (vq - vp) / step;
      best = max_of(best, vp - slope * step);
      best = max_of(best, vq + slope * step);
    }
  }
  return best;
}

bool dominated_on(const Curve& f, const Curve& g, const Rational& horizon) {
  const auto xs = merged_breakpoints(f.unroll(horizon), g.unroll(horizon), 0, horizon);
  for (const auto& x : xs) {
    if (g(x) < f(x)) return false;
    if (x > 0 && g.left_limit(x) < f.left_limit(x)) return false;
    if (x < horizon && g.right_limit(x) < f.right_limit(x)) return false;
  }
  return true;
}

}  // namespace tsnnc
