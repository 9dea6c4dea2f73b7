#include "tsnnc/render.hpp"

#include <sstream>

#include "tsnnc/errors.hpp"

namespace tsnnc {

void write_samples_csv(std::ostream& os, const Curve& f, const Rational& step, const Rational& horizon,
                       int significant) {
  if (step <= 0) throw ParameterError("sampling step must be positive");
  if (horizon < 0) throw ParameterError("sampling horizon must be non-negative");
  os << "t,value\n";
  for (Integer k = 0;; ++k) {
    const Rational t = Rational(k) * step;
    if (t > horizon) break;
    const Extended v = f(t);
    os << to_decimal(t, significant) << ',' << (v.is_finite() ? to_decimal(v.value(), significant) : "inf")
       << '\n';
  }
}

std::string samples_csv(const Curve& f, const Rational& step, const Rational& horizon, int significant) {
  std::ostringstream os;
  write_samples_csv(os, f, step, horizon, significant);
  return os.str();
}

}  // namespace tsnnc
