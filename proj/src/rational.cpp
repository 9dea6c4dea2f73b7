#include "tsnnc/rational.hpp"

#include <stdexcept>

namespace tsnnc {

Integer floor_div(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_div(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational lcm(const Rational& a, const Rational& b) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("lcm requires positive rationals");
  Integer num;
  Integer den;
  mpz_lcm(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  mpz_gcd(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational pow10q(long e) {
  if (e >= 0) return Rational(pow10(static_cast<unsigned long>(e)));
  return Rational(Integer(1), pow10(static_cast<unsigned long>(-e)));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer");
  Integer r(std::string(s), 10);
  return neg ? Integer(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty number");
  try {
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      Integer num = parse_integer(s.substr(0, slash));
      Integer den = parse_integer(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    bool neg = false;
    if (s.front() == '-' || s.front() == '+') {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      exponent = parse_integer(s.substr(e + 1)).get_si();
      s = s.substr(0, e);
    }
    std::string digits;
    long frac = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      auto ip = s.substr(0, dot);
      auto fp = s.substr(dot + 1);
      if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
          (!fp.empty() && !all_digits(fp))) {
        throw std::invalid_argument("bad decimal");
      }
      digits = std::string(ip) + std::string(fp);
      frac = static_cast<long>(fp.size());
    } else {
      if (!all_digits(s)) throw std::invalid_argument("bad decimal");
      digits = std::string(s);
    }
    Rational r(Integer(digits, 10));
    r *= pow10q(exponent - frac);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not an exact number: '" + std::string(text) + "'");
  }
}

std::string to_exact_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

// Formats |n| / 10^scale as a plain decimal string.
std::string place_point(const Integer& n, long scale) {
  std::string digits = n.get_str();
  if (scale <= 0) return digits + std::string(static_cast<size_t>(-scale), '0');
  if (static_cast<long>(digits.size()) <= scale) {
    digits = std::string(static_cast<size_t>(scale) - digits.size() + 1, '0') + digits;
  }
  digits.insert(digits.size() - static_cast<size_t>(scale), ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return digits;
}

}  // namespace

std::string to_decimal(const Rational& q, int significant) {
  if (q == 0) return "0";
  const bool neg = q < 0;
  Rational a = abs(q);

  Integer den = a.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), Integer(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), Integer(5).get_mpz_t());
  std::string body;
  if (den == 1) {
    long scale = static_cast<long>(std::max(twos, fives));
    Rational scaled = a * pow10q(scale);
    body = place_point(scaled.get_num(), scale);
  } else {
    // exponent e with 10^e <= a < 10^(e+1)
    long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
    while (pow10q(e) > a) --e;
    while (pow10q(e + 1) <= a) ++e;
    long scale = significant - 1 - e;
    Rational scaled = a * pow10q(scale) + Rational(1, 2);
    Integer rounded = floor_div(scaled);
    body = place_point(rounded, scale);
  }
  return neg ? "-" + body : body;
}

}  // namespace tsnnc
