#include "tsnnc/bounds.hpp"

#include "tsnnc/errors.hpp"
#include "tsnnc/minplus.hpp"

namespace tsnnc {

Rational delay_bound(const Curve& arrival, const Curve& service) { return horizontal_deviation(arrival, service); }

Rational backlog_bound(const Curve& arrival, const Curve& service) {
  return max_of(vertical_deviation(arrival, service), Rational(0));
}

Curve output_bound(const Curve& arrival, const Curve& service) {
  Curve out = deconvolve(arrival, service);
  if (out.value(0) == 0) return out;
  return minimum(out, Curve::burst_delay(0));
}

Rational two_flow_cbs_delay(const Rational& lower_max_frame, const Rational& link_rate, const Rational& burst,
                            const Rational& rate, const Rational& idle_slope) {
  if (burst < 0 || rate < 0 || lower_max_frame < 0) throw ParameterError("burst, rate and frame must be >= 0");
  if (!(2 * rate < idle_slope) || idle_slope > link_rate || !(rate < link_rate)) {
    throw InfeasibleError("closed form needs 2r < I <= C and r < C");
  }
  return lower_max_frame / link_rate + 2 * link_rate * burst / (idle_slope * (link_rate - rate)) -
         burst / (link_rate - rate);
}

}  // namespace tsnnc
