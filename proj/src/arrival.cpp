#include "tsnnc/arrival.hpp"

#include "tsnnc/errors.hpp"
#include "tsnnc/minplus.hpp"

namespace tsnnc {

void check_flow(const FlowSpec& flow, const Rational& link_rate) {
  if (flow.cmi <= 0) throw ParameterError("flow " + flow.id + ": cmi must be positive");
  if (flow.mif < 1) throw ParameterError("flow " + flow.id + ": mif must be at least 1");
  if (flow.mfs < 1) throw ParameterError("flow " + flow.id + ": mfs must be at least 1");
  if (link_rate <= 0) throw ParameterError("link rate must be positive");
  if (flow.interval_bits() > link_rate * flow.cmi) {
    throw InfeasibleError("flow " + flow.id + ": " + to_decimal(flow.interval_bits()) +
                          " bits per interval exceed link capacity " + to_decimal(link_rate * flow.cmi));
  }
}

BucketParams simple_arrival_params(const FlowSpec& flow, const Rational& link_rate) {
  check_flow(flow, link_rate);
  const Rational m = flow.interval_bits();
  const Rational r = flow.rate();
  Rational b = m * (1 - r / link_rate);
  if (!flow.periodic) b *= 2;
  return {b, r};
}

Curve simple_arrival(const FlowSpec& flow, const Rational& link_rate) {
  const auto p = simple_arrival_params(flow, link_rate);
  return minimum(Curve::affine(0, link_rate), Curve::leaky_bucket(p.burst, p.rate));
}

Curve detailed_periodic_arrival(const FlowSpec& flow, const Rational& link_rate) {
  check_flow(flow, link_rate);
  return convolve(Curve::staircase(flow.interval_bits(), flow.cmi), Curve::affine(0, link_rate));
}

Curve detailed_aperiodic_legacy(const FlowSpec& flow, const Rational& link_rate) {
  check_flow(flow, link_rate);
  const Rational m = flow.interval_bits();
  // ceil((t + cmi) / cmi) = 1 + ceil(t / cmi); the extra step starts right after 0
  const Curve steps = Curve::staircase(m, flow.cmi) + Curve::leaky_bucket(m, 0);
  return convolve(steps, Curve::affine(0, link_rate));
}

Curve detailed_aperiodic_improved(const FlowSpec& flow, const Rational& link_rate) {
  check_flow(flow, link_rate);
  const Rational m = flow.interval_bits();
  const Rational idle = flow.cmi - m / link_rate;
  if (idle == 0) return Curve::affine(0, link_rate);
  const Curve idle_time = Curve::staircase(idle, flow.cmi, 2 * m / link_rate);
  return non_decreasing_closure(Curve::affine(0, link_rate) + scale(idle_time, -link_rate));
}

Curve aggregate_arrivals(const std::vector<Curve>& curves) {
  if (curves.empty()) throw ParameterError("cannot aggregate an empty list of arrival curves");
  Curve sum = curves.front();
  for (size_t i = 1; i < curves.size(); ++i) sum = sum + curves[i];
  return sum;
}

}  // namespace tsnnc
