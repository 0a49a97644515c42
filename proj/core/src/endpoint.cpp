#include "carnot/endpoint.hpp"

#include <stdexcept>

namespace carnot {

void check_control(const StratifiedAlgebra& alg, const PiecewiseConstantControl& c) {
  if (c.values.empty()) throw std::invalid_argument("control: needs at least one piece");
  if (c.breakpoints.size() != c.values.size() + 1)
    throw std::invalid_argument("control: breakpoint/value count mismatch");
  if (c.breakpoints.front() != 0 || c.breakpoints.back() != 1)
    throw std::invalid_argument("control: breakpoints must run from 0 to 1");
  for (size_t i = 0; i + 1 < c.breakpoints.size(); ++i)
    if (!(c.breakpoints[i] < c.breakpoints[i + 1]))
      throw std::invalid_argument("control: breakpoints must be strictly increasing");
  for (const AlgebraVector& v : c.values)
    if (!is_horizontal(alg, v))
      throw std::invalid_argument("control: non-horizontal value");
}

void check_horizontal_tuple(const StratifiedAlgebra& alg, const HorizontalTuple& t) {
  if (t.empty()) throw std::invalid_argument("horizontal tuple: empty");
  for (const AlgebraVector& v : t)
    if (!is_horizontal(alg, v))
      throw std::invalid_argument("horizontal tuple: non-horizontal entry");
}

PiecewiseConstantControl constant_control(const StratifiedAlgebra& alg,
                                          const AlgebraVector& value) {
  PiecewiseConstantControl c{{Rational(0), Rational(1)}, {value}};
  check_control(alg, c);
  return c;
}

GroupElement endpoint(const StratifiedAlgebra& alg, const AlgebraVector& base_x,
                      const PiecewiseConstantControl& control) {
  check_dimension(alg, base_x, "endpoint");
  if (!is_horizontal(alg, base_x))
    throw std::invalid_argument("endpoint: non-horizontal base vector");
  check_control(alg, control);
  GroupElement g = identity(alg);
  for (int i = 0; i < control.pieces(); ++i) {
    Rational length = control.breakpoints[i + 1] - control.breakpoints[i];
    AlgebraVector slope = (base_x + control.values[i]).scaled(length);
    g = multiply(alg, g, exp_of(alg, slope));
  }
  return g;
}

GroupElement multiexp(const StratifiedAlgebra& alg, const HorizontalTuple& tuple) {
  check_horizontal_tuple(alg, tuple);
  GroupElement g = identity(alg);
  for (int i = static_cast<int>(tuple.size()) - 1; i >= 0; --i)
    g = multiply(alg, g, exp_of(alg, tuple[i]));
  return g;
}

PiecewiseConstantControl control_matching_tuple(const StratifiedAlgebra& alg,
                                                const HorizontalTuple& tuple) {
  check_horizontal_tuple(alg, tuple);
  const int p = static_cast<int>(tuple.size());
  PiecewiseConstantControl c;
  c.breakpoints.reserve(p + 1);
  for (int i = 0; i <= p; ++i) c.breakpoints.push_back(make_rational(i, p));
  c.values.reserve(p);
  for (int i = 0; i < p; ++i) c.values.push_back(tuple[p - 1 - i]);
  return c;
}

PiecewiseConstantControl refine(const StratifiedAlgebra& alg,
                                const PiecewiseConstantControl& control,
                                const Rational& new_breakpoint) {
  check_control(alg, control);
  if (!(new_breakpoint > 0 && new_breakpoint < 1))
    throw std::invalid_argument("refine: breakpoint must lie in (0,1)");
  PiecewiseConstantControl out;
  out.breakpoints.push_back(control.breakpoints.front());
  for (int i = 0; i < control.pieces(); ++i) {
    if (new_breakpoint > control.breakpoints[i] &&
        new_breakpoint < control.breakpoints[i + 1]) {
      out.breakpoints.push_back(new_breakpoint);
      out.values.push_back(control.values[i]);
    }
    out.breakpoints.push_back(control.breakpoints[i + 1]);
    out.values.push_back(control.values[i]);
  }
  return out;
}

}  // namespace carnot
