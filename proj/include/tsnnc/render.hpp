#pragma once

#include <ostream>
#include <string>

#include "tsnnc/curve.hpp"

namespace tsnnc {

/// Writes `t,value` rows for t = 0, step, 2*step, ... up to and including
/// `horizon`. Infinite values are written as "inf". LF line endings.
void write_samples_csv(std::ostream& os, const Curve& f, const Rational& step, const Rational& horizon,
                       int significant = 12);

std::string samples_csv(const Curve& f, const Rational& step, const Rational& horizon, int significant = 12);

}  // namespace tsnnc
