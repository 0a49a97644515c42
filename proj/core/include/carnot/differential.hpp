#pragma once

#include <functional>
#include <vector>

#include "carnot/algebra.hpp"
#include "carnot/endpoint.hpp"
#include "carnot/group.hpp"
#include "carnot/matrix.hpp"

namespace carnot {

/// Left-trivialized differential of exp at x: the matrix F(ad_x) with
/// F(t) = (1 - e^{-t})/t, i.e. sum_{k>=0} (-ad_x)^k/(k+1)! (finite by
/// nilpotency), so that exp(x + eps y) = exp(x) exp(eps F(ad_x) y + O(eps^2)).
/// F(ad_x) is unipotent; invertibility is asserted.
RationalMatrix dexp_left(const StratifiedAlgebra& alg, const AlgebraVector& x);

/// n x d1 matrix of the inclusion of layer 1.
RationalMatrix layer1_inclusion(const StratifiedAlgebra& alg);

/// Left-trivialized Jacobian of the multiexponential map at the tuple, an
/// n x (p*d1) matrix. Block i (columns for slot i of the tuple) equals
/// Ad_{P_{i-1}}^{-1} F(ad_{Y_i}) restricted to layer-1 columns, with
/// P_{i-1} = exp(Y_{i-1}) ... exp(Y_1) and P_0 = identity.
RationalMatrix dmultiexp(const StratifiedAlgebra& alg, const HorizontalTuple& tuple);

/// Left-trivialized Jacobian of the endpoint map based at X, restricted to
/// piecewise constant controls on the uniform p-partition, at the zero
/// control; n x (p*d1). Block i (time interval i) equals
/// (1/p) Ad_{exp(-(p-i)X/p)} F(ad_{X/p}) on layer-1 columns. It coincides
/// with the delta_{1/p}-pushforward of dmultiexp at (X,...,X) with time
/// interval i matched to tuple slot p-i+1 (tested exactly).
RationalMatrix dendpoint_pc(const StratifiedAlgebra& alg, const AlgebraVector& base_x,
                            int partition);

/// Exact rank (no tolerance).
int rank(const RationalMatrix& m);

/// Plain double-precision matrix for the finite-difference oracle.
struct FloatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  FloatMatrix() = default;
  FloatMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}
  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

FloatMatrix to_float(const RationalMatrix& m);

/// Central-difference Jacobian of an exactly evaluated map: each input
/// coordinate is shifted by +/- h in exact arithmetic and the quotient is
/// converted to double at the end, so the only error is the O(h^2)
/// truncation. Throws std::runtime_error on non-finite output.
FloatMatrix fd_jacobian(
    const std::function<std::vector<Rational>(const std::vector<Rational>&)>& map,
    const std::vector<Rational>& point, const Rational& h);

/// max_{ij} |a_ij - b_ij| / max(1, max_ij |b_ij|).
double max_rel_deviation(const FloatMatrix& a, const FloatMatrix& b);

}  // namespace carnot
