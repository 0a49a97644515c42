#include "carnot/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace carnot {

namespace detail {

namespace {

mpz_class factorial(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Enumerates all block sequences ((p_1,q_1),...,(p_k,q_k)) with p_i+q_i >= 1
// and total length <= cutoff; each sequence contributes
// (-1)^{k-1} / (k * T * prod p_i! q_i!) to the word x^{p_1} y^{q_1} ... .
void accumulate(std::map<std::string, Rational>& acc, std::string& word, int k,
                const mpz_class& fact_prod, int cutoff) {
  if (k > 0) {
    const int len = static_cast<int>(word.size());
    Rational coeff = make_rational(mpz_class(k % 2 == 1 ? 1 : -1),
                                   mpz_class(k) * len * fact_prod);
    acc[word] += coeff;
  }
  const int room = cutoff - static_cast<int>(word.size());
  for (int total = 1; total <= room; ++total) {
    for (int p = 0; p <= total; ++p) {
      const int q = total - p;
      const size_t before = word.size();
      word.append(p, 'x');
      word.append(q, 'y');
      accumulate(acc, word, k + 1, fact_prod * factorial(p) * factorial(q), cutoff);
      word.resize(before);
    }
  }
}

}  // namespace

const std::vector<std::pair<std::string, Rational>>& dynkin_words(int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("dynkin_words: cutoff must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<std::pair<std::string, Rational>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(cutoff);
  if (it != cache.end()) return it->second;

  std::map<std::string, Rational> acc;
  std::string word;
  accumulate(acc, word, 0, 1, cutoff);

  std::vector<std::pair<std::string, Rational>> table;
  for (const auto& [w, c] : acc) {
    if (c == 0) continue;
    const size_t len = w.size();
    if (len >= 2 && w[len - 1] == w[len - 2]) continue;  // [l,l] = 0 tail
    table.emplace_back(w, c);
  }
  std::sort(table.begin(), table.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size()
                                            : a.first < b.first;
  });
  return cache.emplace(cutoff, std::move(table)).first->second;
}

}  // namespace detail

GroupElement identity(const StratifiedAlgebra& alg) { return {zero_vector(alg)}; }

GroupElement exp_of(const StratifiedAlgebra& alg, const AlgebraVector& x) {
  check_dimension(alg, x, "exp");
  return {x};
}

AlgebraVector bch(const StratifiedAlgebra& alg, const AlgebraVector& x,
                  const AlgebraVector& y) {
  check_dimension(alg, x, "bch");
  check_dimension(alg, y, "bch");
  AlgebraVector result(alg.dim());
  for (const auto& [word, coeff] : detail::dynkin_words(alg.step())) {
    // Right-nested bracket of the word, built from the last letter inwards.
    AlgebraVector acc = word.back() == 'x' ? x : y;
    bool dead = false;
    for (int pos = static_cast<int>(word.size()) - 2; pos >= 0; --pos) {
      acc = bracket(alg, word[pos] == 'x' ? x : y, acc);
      if (acc.is_zero()) {
        dead = true;
        break;
      }
    }
    if (dead) continue;
    result = result + acc.scaled(coeff);
  }
  return result;
}

GroupElement multiply(const StratifiedAlgebra& alg, const GroupElement& g,
                      const GroupElement& h) {
  return {bch(alg, g.log_coords, h.log_coords)};
}

GroupElement inverse(const StratifiedAlgebra& alg, const GroupElement& g) {
  check_dimension(alg, g.log_coords, "inverse");
  return {-g.log_coords};
}

GroupElement power(const StratifiedAlgebra& alg, const GroupElement& g, int k) {
  if (k < 0) return power(alg, inverse(alg, g), -k);
  GroupElement acc = identity(alg);
  for (int i = 0; i < k; ++i) acc = multiply(alg, acc, g);
  return acc;
}

GroupElement dilate_group(const StratifiedAlgebra& alg, const Rational& lambda,
                          const GroupElement& g) {
  return {dilate_vector(alg, lambda, g.log_coords)};
}

RationalMatrix adjoint(const StratifiedAlgebra& alg, const AlgebraVector& x) {
  check_dimension(alg, x, "adjoint");
  const int n = alg.dim();
  const RationalMatrix ad = ad_matrix(alg, x);
  RationalMatrix sum = RationalMatrix::identity(n);
  RationalMatrix term = RationalMatrix::identity(n);
  mpz_class kfact = 1;
  for (int k = 1; k < alg.step(); ++k) {
    term = term * ad;
    kfact *= k;
    sum = sum + term.scaled(make_rational(mpz_class(1), kfact));
  }

  // Ad_{exp(x)} Ad_{exp(-x)} = I; cheap exactness guard on the series.
  const RationalMatrix neg_ad = ad.scaled(Rational(-1));
  RationalMatrix inv = RationalMatrix::identity(n);
  RationalMatrix neg_term = RationalMatrix::identity(n);
  mpz_class kf = 1;
  for (int k = 1; k < alg.step(); ++k) {
    neg_term = neg_term * neg_ad;
    kf *= k;
    inv = inv + neg_term.scaled(make_rational(mpz_class(1), kf));
  }
  if (!(sum * inv == RationalMatrix::identity(n)))
    throw std::logic_error("adjoint: e^{ad_x} e^{-ad_x} != I (structure constants not nilpotent?)");
  return sum;
}

}  // namespace carnot
