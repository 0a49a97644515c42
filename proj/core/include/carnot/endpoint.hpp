#pragma once

#include <vector>

#include "carnot/algebra.hpp"
#include "carnot/group.hpp"

namespace carnot {

/// Horizontal control that is constant between consecutive breakpoints:
/// value[i] on (breakpoints[i], breakpoints[i+1]). Breakpoints are exact
/// rationals with 0 = t_0 < t_1 < ... < t_p = 1.
struct PiecewiseConstantControl {
  std::vector<Rational> breakpoints;
  std::vector<AlgebraVector> values;

  int pieces() const { return static_cast<int>(values.size()); }
};

/// Tuple (Y_1, ..., Y_p) of horizontal vectors.
using HorizontalTuple = std::vector<AlgebraVector>;

/// Throws std::invalid_argument on malformed breakpoints or non-horizontal
/// values.
void check_control(const StratifiedAlgebra& alg, const PiecewiseConstantControl& c);

void check_horizontal_tuple(const StratifiedAlgebra& alg, const HorizontalTuple& t);

/// Control constant equal to `value` on all of [0, 1].
PiecewiseConstantControl constant_control(const StratifiedAlgebra& alg,
                                          const AlgebraVector& value);

/// Endpoint of the flow driven by X + Y from the identity: with interval
/// lengths D_i = t_i - t_{i-1} this is the ordered product
///   exp(D_1 (X + Y_1)) exp(D_2 (X + Y_2)) ... exp(D_p (X + Y_p)),
/// the first-in-time factor on the left. X and all values must be horizontal.
GroupElement endpoint(const StratifiedAlgebra& alg, const AlgebraVector& base_x,
                      const PiecewiseConstantControl& control);

/// p-fold multiexponential: exp(Y_p) exp(Y_{p-1}) ... exp(Y_1); the highest
/// index sits on the left.
GroupElement multiexp(const StratifiedAlgebra& alg, const HorizontalTuple& tuple);

/// Uniform p-piece control whose i-th piece (in time order) is
/// tuple[p-i]/1 = Y_{p-i+1}; dilating its endpoint by p recovers
/// multiexp(tuple). This helper pins the time-order/product-order convention.
PiecewiseConstantControl control_matching_tuple(const StratifiedAlgebra& alg,
                                                const HorizontalTuple& tuple);

/// Inserts a breakpoint, keeping the value on both halves; the endpoint is
/// unchanged.
PiecewiseConstantControl refine(const StratifiedAlgebra& alg,
                                const PiecewiseConstantControl& control,
                                const Rational& new_breakpoint);

}  // namespace carnot
