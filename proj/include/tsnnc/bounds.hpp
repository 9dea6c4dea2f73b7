#pragma once

#include "tsnnc/curve.hpp"

namespace tsnnc {

/// Worst-case delay: horizontal deviation between arrival and service.
Rational delay_bound(const Curve& arrival, const Curve& service);

/// Worst-case backlog: vertical deviation.
Rational backlog_bound(const Curve& arrival, const Curve& service);

/// Output arrival curve arrival (/) service, taken as 0 at t = 0 like every
/// arrival curve.
Curve output_bound(const Curve& arrival, const Curve& service);

/// Delay of two identical min(Ct, b + rt) flows through the highest shaped
/// class with lower-priority blocking lmax:
/// lmax / C + 2 C b / (I (C - r)) - b / (C - r). Needs 2r < I <= C.
Rational two_flow_cbs_delay(const Rational& lower_max_frame, const Rational& link_rate, const Rational& burst,
                            const Rational& rate, const Rational& idle_slope);

}  // namespace tsnnc
