#include "pwl.hpp"

#include <algorithm>

namespace tsnnc::pwl {

Pwl clip(const Pwl& f, const Rational& lo, const Rational& hi) {
  Pwl out;
  for (const auto& e : f) {
    if (e.is_point()) {
      if (e.x0 >= lo && e.x0 <= hi) out.push_back(e);
      continue;
    }
    const bool covers_lo = e.x0 < lo && lo < e.x1;
    if (covers_lo) out.push_back(Element::point(lo, e.at(lo)));
    Rational a = max_of(e.x0, lo);
    Rational b = min_of(e.x1, hi);
    if (a < b) out.push_back(Element::segment(a, b, e.at(a), e.slope));
    if (e.x0 < hi && hi < e.x1 && !(covers_lo && lo == hi)) {
      out.push_back(Element::point(hi, e.at(hi)));
    }
  }
  return out;
}

std::optional<Rational> Cursor::at_point(const Rational& x) {
  while (i_ < f_.size() && (f_[i_].x1 < x || (!f_[i_].is_point() && f_[i_].x1 == x))) ++i_;
  if (i_ >= f_.size()) return std::nullopt;
  const auto& e = f_[i_];
  if (e.is_point()) {
    if (e.x0 == x) return e.y;
    return std::nullopt;
  }
  if (e.x0 < x && x < e.x1) return e.at(x);
  return std::nullopt;
}

std::optional<std::pair<Rational, Rational>> Cursor::on_interval(const Rational& lo,
                                                                  const Rational& hi) {
  while (i_ < f_.size() && f_[i_].x1 <= lo) ++i_;
  if (i_ >= f_.size()) return std::nullopt;
  const auto& e = f_[i_];
  if (!e.is_point() && e.x0 <= lo && e.x1 >= hi) return std::make_pair(e.at(lo), e.slope);
  return std::nullopt;
}

namespace {

std::vector<Rational> union_breakpoints(const Pwl& a, const Pwl& b) {
  std::vector<Rational> xs;
  xs.reserve(2 * (a.size() + b.size()));
  for (const auto* f : {&a, &b}) {
    for (const auto& e : *f) {
      xs.push_back(e.x0);
      if (!e.is_point()) xs.push_back(e.x1);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool better(const Rational& candidate, const Rational& incumbent, Pick pick) {
  return pick == Pick::min ? candidate < incumbent : candidate > incumbent;
}

}  // namespace

Pwl merge(const Pwl& a, const Pwl& b, Pick pick) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const auto xs = union_breakpoints(a, b);
  Cursor ca(a);
  Cursor cb(b);
  Pwl out;
  out.reserve(xs.size() * 2);
  for (size_t k = 0; k < xs.size(); ++k) {
    const Rational& x = xs[k];
    auto va = ca.at_point(x);
    auto vb = cb.at_point(x);
    if (va && vb) {
      out.push_back(Element::point(x, better(*vb, *va, pick) ? *vb : *va));
    } else if (va) {
      out.push_back(Element::point(x, *va));
    } else if (vb) {
      out.push_back(Element::point(x, *vb));
    }
    if (k + 1 == xs.size()) break;
    const Rational& hi = xs[k + 1];
    auto sa = ca.on_interval(x, hi);
    auto sb = cb.on_interval(x, hi);
    if (sa && sb) {
      Rational d0 = sa->first - sb->first;
      Rational d1 = d0 + (sa->second - sb->second) * (hi - x);
      if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0)) {
        Rational xc = x + (sb->first - sa->first) / (sa->second - sb->second);
        Rational yc = sa->first + sa->second * (xc - x);
        // Which side wins before the crossing.
        bool a_first = pick == Pick::min ? d0 < 0 : d0 > 0;
        const auto& s1 = a_first ? *sa : *sb;
        const auto& s2 = a_first ? *sb : *sa;
        out.push_back(Element::segment(x, xc, s1.first, s1.second));
        out.push_back(Element::point(xc, yc));
        out.push_back(Element::segment(xc, hi, yc, s2.second));
      } else {
        bool take_a;
        if (d0 != 0) {
          take_a = pick == Pick::min ? d0 < 0 : d0 > 0;
        } else {
          take_a = pick == Pick::min ? d1 <= 0 : d1 >= 0;
        }
        const auto& s = take_a ? *sa : *sb;
        out.push_back(Element::segment(x, hi, s.first, s.second));
      }
    } else if (sa) {
      out.push_back(Element::segment(x, hi, sa->first, sa->second));
    } else if (sb) {
      out.push_back(Element::segment(x, hi, sb->first, sb->second));
    }
  }
  return simplify(out);
}

Pwl add(const Pwl& a, const Pwl& b) {
  if (a.empty() || b.empty()) return {};
  const auto xs = union_breakpoints(a, b);
  Cursor ca(a);
  Cursor cb(b);
  Pwl out;
  for (size_t k = 0; k < xs.size(); ++k) {
    const Rational& x = xs[k];
    auto va = ca.at_point(x);
    auto vb = cb.at_point(x);
    if (va && vb) out.push_back(Element::point(x, *va + *vb));
    if (k + 1 == xs.size()) break;
    const Rational& hi = xs[k + 1];
    auto sa = ca.on_interval(x, hi);
    auto sb = cb.on_interval(x, hi);
    if (sa && sb) {
      out.push_back(Element::segment(x, hi, sa->first + sb->first, sa->second + sb->second));
    }
  }
  return simplify(out);
}

Pwl envelope(std::vector<Pwl> parts, Pick pick) {
  if (parts.empty()) return {};
  while (parts.size() > 1) {
    std::vector<Pwl> next;
    next.reserve((parts.size() + 1) / 2);
    for (size_t i = 0; i + 1 < parts.size(); i += 2) {
      next.push_back(merge(parts[i], parts[i + 1], pick));
    }
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

Pwl simplify(const Pwl& f) {
  Pwl out;
  out.reserve(f.size());
  for (const auto& e : f) {
    if (!e.is_point() && out.size() >= 2) {
      const auto& p = out[out.size() - 1];
      const auto& s = out[out.size() - 2];
      if (p.is_point() && !s.is_point() && s.x1 == p.x0 && e.x0 == p.x0 && s.slope == e.slope &&
          s.end_value() == p.y && e.y == p.y) {
        Element joined = Element::segment(s.x0, e.x1, s.y, s.slope);
        out.pop_back();
        out.back() = joined;
        continue;
      }
    }
    out.push_back(e);
  }
  return out;
}

std::vector<Rational> breakpoints(const Pwl& f, const Rational& lo, const Rational& hi) {
  std::vector<Rational> xs;
  for (const auto& e : f) {
    if (e.x0 >= lo && e.x0 <= hi) xs.push_back(e.x0);
    if (e.x1 >= lo && e.x1 <= hi) xs.push_back(e.x1);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace tsnnc::pwl
