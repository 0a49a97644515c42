#pragma once

#include <vector>

#include "carnot/algebra.hpp"
#include "carnot/matrix.hpp"

namespace carnot {

/// Group element in exponential coordinates of the first kind: the element is
/// exp(log_coords). The identity has zero coordinates.
struct GroupElement {
  AlgebraVector log_coords;

  bool operator==(const GroupElement& o) const { return log_coords == o.log_coords; }
};

GroupElement identity(const StratifiedAlgebra& alg);
GroupElement exp_of(const StratifiedAlgebra& alg, const AlgebraVector& x);
inline const AlgebraVector& log_of(const GroupElement& g) { return g.log_coords; }

/// z with exp(z) = exp(x) exp(y): Dynkin's commutator series for
/// log(exp(x) exp(y)), evaluated term by term with all commutators of weight
/// beyond the step dropped (they vanish in a step-s algebra). The series is
/// grouped by commutator word; the per-word coefficients are computed once per
/// step and cached.
AlgebraVector bch(const StratifiedAlgebra& alg, const AlgebraVector& x,
                  const AlgebraVector& y);

GroupElement multiply(const StratifiedAlgebra& alg, const GroupElement& g,
                      const GroupElement& h);
GroupElement inverse(const StratifiedAlgebra& alg, const GroupElement& g);

/// g^k by repeated multiplication; k may be negative.
GroupElement power(const StratifiedAlgebra& alg, const GroupElement& g, int k);

/// delta_lambda(exp(X)) = exp(delta_lambda(X)); a group automorphism.
GroupElement dilate_group(const StratifiedAlgebra& alg, const Rational& lambda,
                          const GroupElement& g);

/// Ad_{exp(x)} = e^{ad_x} as an exact matrix (finite sum; ad_x is nilpotent).
/// The inverse is adjoint(alg, -x); the product of the two is asserted to be
/// the identity.
RationalMatrix adjoint(const StratifiedAlgebra& alg, const AlgebraVector& x);

namespace detail {
/// Per-word coefficients of the Dynkin series up to commutator weight
/// `cutoff`, keyed by words over {'x','y'}; words whose right-nested bracket
/// vanishes identically (equal last two letters) are dropped. Exposed for
/// tests.
const std::vector<std::pair<std::string, Rational>>& dynkin_words(int cutoff);
}  // namespace detail

}  // namespace carnot
