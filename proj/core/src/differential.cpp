#include "carnot/differential.hpp"

#include <cmath>
#include <stdexcept>

namespace carnot {

RationalMatrix dexp_left(const StratifiedAlgebra& alg, const AlgebraVector& x) {
  check_dimension(alg, x, "dexp_left");
  const int n = alg.dim();
  const RationalMatrix ad = ad_matrix(alg, x);
  RationalMatrix sum = RationalMatrix::identity(n);
  RationalMatrix term = RationalMatrix::identity(n);
  mpz_class factor = 1;  // (k+1)!
  int sign = 1;
  for (int k = 1; k < alg.step(); ++k) {
    term = term * ad;
    factor *= (k + 1);
    sign = -sign;
    sum = sum + term.scaled(make_rational(mpz_class(sign), factor));
  }
  if (sum.rank() != n)
    throw std::logic_error("dexp_left: F(ad_x) is singular (ad_x not nilpotent?)");
  return sum;
}

RationalMatrix layer1_inclusion(const StratifiedAlgebra& alg) {
  RationalMatrix m(alg.dim(), alg.first_layer_dim());
  for (int j = 0; j < alg.first_layer_dim(); ++j) m.at(j, j) = 1;
  return m;
}

RationalMatrix dmultiexp(const StratifiedAlgebra& alg, const HorizontalTuple& tuple) {
  check_horizontal_tuple(alg, tuple);
  const int n = alg.dim();
  const int d1 = alg.first_layer_dim();
  const int p = static_cast<int>(tuple.size());
  RationalMatrix jac(n, p * d1);

  GroupElement prefix = identity(alg);  // P_{i-1} = exp(Y_{i-1}) ... exp(Y_1)
  for (int i = 0; i < p; ++i) {
    RationalMatrix block =
        adjoint(alg, -prefix.log_coords) * dexp_left(alg, tuple[i]) * layer1_inclusion(alg);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < d1; ++c) jac.at(r, i * d1 + c) = block.at(r, c);
    prefix = multiply(alg, exp_of(alg, tuple[i]), prefix);
  }
  return jac;
}

RationalMatrix dendpoint_pc(const StratifiedAlgebra& alg, const AlgebraVector& base_x,
                            int partition) {
  check_dimension(alg, base_x, "dendpoint_pc");
  if (!is_horizontal(alg, base_x))
    throw std::invalid_argument("dendpoint_pc: non-horizontal base vector");
  if (partition < 1) throw std::invalid_argument("dendpoint_pc: partition must be >= 1");

  const int n = alg.dim();
  const int d1 = alg.first_layer_dim();
  const int p = partition;
  const Rational inv_p = make_rational(1, p);

  const RationalMatrix common =
      dexp_left(alg, base_x.scaled(inv_p)) * layer1_inclusion(alg);
  const RationalMatrix hop = adjoint(alg, base_x.scaled(-inv_p));  // e^{-ad_{X/p}}

  RationalMatrix jac(n, p * d1);
  RationalMatrix carry = RationalMatrix::identity(n);  // e^{-(p-i) ad_{X/p}}
  for (int i = p; i >= 1; --i) {
    RationalMatrix block = (carry * common).scaled(inv_p);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < d1; ++c) jac.at(r, (i - 1) * d1 + c) = block.at(r, c);
    carry = carry * hop;
  }
  return jac;
}

int rank(const RationalMatrix& m) { return m.rank(); }

FloatMatrix to_float(const RationalMatrix& m) {
  FloatMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = to_double(m.at(r, c));
  return out;
}

FloatMatrix fd_jacobian(
    const std::function<std::vector<Rational>(const std::vector<Rational>&)>& map,
    const std::vector<Rational>& point, const Rational& h) {
  if (!(h > 0)) throw std::invalid_argument("fd_jacobian: h must be positive");
  const int in_dim = static_cast<int>(point.size());
  FloatMatrix out;
  for (int j = 0; j < in_dim; ++j) {
    std::vector<Rational> plus = point;
    std::vector<Rational> minus = point;
    plus[j] += h;
    minus[j] -= h;
    const std::vector<Rational> fp = map(plus);
    const std::vector<Rational> fm = map(minus);
    if (fp.size() != fm.size()) throw std::runtime_error("fd_jacobian: map output size varies");
    if (j == 0) out = FloatMatrix(static_cast<int>(fp.size()), in_dim);
    for (size_t r = 0; r < fp.size(); ++r) {
      const double v = to_double((fp[r] - fm[r]) / (2 * h));
      if (!std::isfinite(v)) throw std::runtime_error("fd_jacobian: non-finite value");
      out.at(static_cast<int>(r), j) = v;
    }
  }
  return out;
}

double max_rel_deviation(const FloatMatrix& a, const FloatMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("max_rel_deviation: shape mismatch");
  double scale = 1.0;
  for (double v : b.data) scale = std::max(scale, std::fabs(v));
  double worst = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i)
    worst = std::max(worst, std::fabs(a.data[i] - b.data[i]) / scale);
  return worst;
}

}  // namespace carnot
