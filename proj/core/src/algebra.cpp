#include "carnot/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace carnot {

bool AlgebraVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Rational& q) { return q == 0; });
}

AlgebraVector AlgebraVector::operator+(const AlgebraVector& o) const {
  if (coords.size() != o.coords.size())
    throw std::invalid_argument("algebra vector: dimension mismatch in +");
  AlgebraVector out(dim());
  for (int i = 0; i < dim(); ++i) out.coords[i] = coords[i] + o.coords[i];
  return out;
}

AlgebraVector AlgebraVector::operator-(const AlgebraVector& o) const {
  if (coords.size() != o.coords.size())
    throw std::invalid_argument("algebra vector: dimension mismatch in -");
  AlgebraVector out(dim());
  for (int i = 0; i < dim(); ++i) out.coords[i] = coords[i] - o.coords[i];
  return out;
}

AlgebraVector AlgebraVector::operator-() const {
  AlgebraVector out(dim());
  for (int i = 0; i < dim(); ++i) out.coords[i] = -coords[i];
  return out;
}

AlgebraVector AlgebraVector::scaled(const Rational& s) const {
  AlgebraVector out(dim());
  for (int i = 0; i < dim(); ++i) out.coords[i] = coords[i] * s;
  return out;
}

StratifiedAlgebra::StratifiedAlgebra(std::string name, std::vector<int> layer_dims,
                                     std::vector<BracketEntry> brackets,
                                     std::vector<std::string> basis_labels)
    : name_(std::move(name)), layer_dims_(std::move(layer_dims)), raw_(std::move(brackets)) {
  if (layer_dims_.empty())
    throw std::invalid_argument("stratified algebra: no layers");
  for (int d : layer_dims_) {
    if (d <= 0) throw std::invalid_argument("stratified algebra: non-positive layer dimension");
    dim_ += d;
  }
  layer_of_.resize(dim_);
  layer_start_.resize(layer_dims_.size());
  {
    int k = 0;
    for (size_t l = 0; l < layer_dims_.size(); ++l) {
      layer_start_[l] = k;
      for (int j = 0; j < layer_dims_[l]; ++j) layer_of_[k++] = static_cast<int>(l) + 1;
    }
  }

  if (basis_labels.empty()) {
    labels_.reserve(dim_);
    for (int k = 0; k < dim_; ++k) labels_.push_back("e" + std::to_string(k + 1));
  } else {
    if (static_cast<int>(basis_labels.size()) != dim_)
      throw std::invalid_argument("stratified algebra: wrong number of basis labels");
    labels_ = std::move(basis_labels);
  }

  std::set<std::pair<int, int>> seen;
  for (const BracketEntry& e : raw_) {
    if (e.i < 0 || e.i >= dim_ || e.j < 0 || e.j >= dim_)
      throw std::invalid_argument("stratified algebra: bracket index out of range");
    if (!seen.insert({e.i, e.j}).second)
      throw std::invalid_argument("stratified algebra: duplicate bracket entry");
    for (const BracketTerm& t : e.terms)
      if (t.k < 0 || t.k >= dim_)
        throw std::invalid_argument("stratified algebra: bracket target out of range");
  }

  // Dense lookup with the antisymmetric mirror synthesized for pairs given in
  // only one order. Pairs given in both orders keep each raw entry as-is.
  table_.assign(static_cast<size_t>(dim_) * dim_, {});
  for (const BracketEntry& e : raw_) table_[e.i * dim_ + e.j] = e.terms;
  for (const BracketEntry& e : raw_) {
    if (e.i == e.j) continue;
    if (seen.count({e.j, e.i})) continue;
    std::vector<BracketTerm> neg;
    neg.reserve(e.terms.size());
    for (const BracketTerm& t : e.terms) neg.push_back({t.k, -t.c});
    table_[e.j * dim_ + e.i] = std::move(neg);
  }
}

const std::vector<BracketTerm>& StratifiedAlgebra::basis_bracket(int i, int j) const {
  return table_.at(static_cast<size_t>(i) * dim_ + j);
}

void check_dimension(const StratifiedAlgebra& alg, const AlgebraVector& v,
                     const char* what) {
  if (v.dim() != alg.dim()) {
    std::ostringstream oss;
    oss << what << ": vector has dimension " << v.dim() << ", algebra has " << alg.dim();
    throw std::invalid_argument(oss.str());
  }
}

AlgebraVector zero_vector(const StratifiedAlgebra& alg) { return AlgebraVector(alg.dim()); }

AlgebraVector basis_vector(const StratifiedAlgebra& alg, int k) {
  if (k < 0 || k >= alg.dim()) throw std::invalid_argument("basis_vector: index out of range");
  AlgebraVector v(alg.dim());
  v.coords[k] = 1;
  return v;
}

AlgebraVector embed_horizontal(const StratifiedAlgebra& alg,
                               const std::vector<Rational>& layer1_coords) {
  if (static_cast<int>(layer1_coords.size()) != alg.first_layer_dim())
    throw std::invalid_argument("embed_horizontal: expected layer-1 coordinates");
  AlgebraVector v(alg.dim());
  for (int i = 0; i < alg.first_layer_dim(); ++i) v.coords[i] = layer1_coords[i];
  return v;
}

bool is_horizontal(const StratifiedAlgebra& alg, const AlgebraVector& v) {
  check_dimension(alg, v, "is_horizontal");
  for (int k = alg.first_layer_dim(); k < alg.dim(); ++k)
    if (v.coords[k] != 0) return false;
  return true;
}

AlgebraVector bracket(const StratifiedAlgebra& alg, const AlgebraVector& a,
                      const AlgebraVector& b) {
  check_dimension(alg, a, "bracket");
  check_dimension(alg, b, "bracket");
  AlgebraVector out(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < alg.dim(); ++j) {
      if (b.coords[j] == 0) continue;
      const auto& terms = alg.basis_bracket(i, j);
      if (terms.empty()) continue;
      Rational scale = a.coords[i] * b.coords[j];
      for (const BracketTerm& t : terms) out.coords[t.k] += scale * t.c;
    }
  }
  return out;
}

AlgebraVector dilate_vector(const StratifiedAlgebra& alg, const Rational& lambda,
                            const AlgebraVector& v) {
  check_dimension(alg, v, "dilate_vector");
  AlgebraVector out(alg.dim());
  std::vector<Rational> powers(alg.step() + 1, Rational(1));
  for (int i = 1; i <= alg.step(); ++i) powers[i] = powers[i - 1] * lambda;
  for (int k = 0; k < alg.dim(); ++k) out.coords[k] = v.coords[k] * powers[alg.layer_of(k)];
  return out;
}

RationalMatrix dilation_matrix(const StratifiedAlgebra& alg, const Rational& lambda) {
  RationalMatrix m(alg.dim(), alg.dim());
  for (int k = 0; k < alg.dim(); ++k)
    m.at(k, k) = rational_pow(lambda, static_cast<unsigned>(alg.layer_of(k)));
  return m;
}

RationalMatrix ad_matrix(const StratifiedAlgebra& alg, const AlgebraVector& x) {
  check_dimension(alg, x, "ad_matrix");
  RationalMatrix m(alg.dim(), alg.dim());
  for (int j = 0; j < alg.dim(); ++j) {
    for (int i = 0; i < alg.dim(); ++i) {
      if (x.coords[i] == 0) continue;
      for (const BracketTerm& t : alg.basis_bracket(i, j))
        m.at(t.k, j) += x.coords[i] * t.c;
    }
  }
  return m;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::antisymmetry: return "antisymmetry";
    case ViolationKind::jacobi: return "jacobi";
    case ViolationKind::grading: return "grading";
    case ViolationKind::bracket_generating: return "bracket_generating";
  }
  return "?";
}

namespace {

Rational coeff_of(const std::vector<BracketTerm>& terms, int k) {
  Rational c(0);
  for (const BracketTerm& t : terms)
    if (t.k == k) c += t.c;
  return c;
}

std::string describe_vector(const StratifiedAlgebra& alg, const AlgebraVector& v) {
  std::ostringstream oss;
  bool first = true;
  for (int k = 0; k < alg.dim(); ++k) {
    if (v.coords[k] == 0) continue;
    if (!first) oss << " + ";
    oss << to_string(v.coords[k]) << "*" << alg.basis_label(k);
    first = false;
  }
  if (first) oss << "0";
  return oss.str();
}

}  // namespace

ValidationReport validate(const StratifiedAlgebra& alg) {
  ValidationReport report;
  const int n = alg.dim();

  // Antisymmetry: c[i][j][k] == -c[j][i][k] whenever both orders are stored,
  // and [e_i, e_i] == 0.
  std::map<std::pair<int, int>, const BracketEntry*> raw_by_pair;
  for (const BracketEntry& e : alg.raw_entries()) raw_by_pair[{e.i, e.j}] = &e;
  for (const BracketEntry& e : alg.raw_entries()) {
    if (e.i == e.j) {
      for (const BracketTerm& t : e.terms) {
        if (t.c == 0) continue;
        report.violations.push_back(
            {ViolationKind::antisymmetry,
             {e.i + 1, e.j + 1, t.k + 1},
             "[" + alg.basis_label(e.i) + "," + alg.basis_label(e.i) + "] must vanish"});
      }
      continue;
    }
    if (e.i > e.j) continue;  // handled from the (i<j) side below
    auto mirror = raw_by_pair.find({e.j, e.i});
    if (mirror == raw_by_pair.end()) continue;
    std::set<int> targets;
    for (const BracketTerm& t : e.terms) targets.insert(t.k);
    for (const BracketTerm& t : mirror->second->terms) targets.insert(t.k);
    for (int k : targets) {
      Rational forward = coeff_of(e.terms, k);
      Rational backward = coeff_of(mirror->second->terms, k);
      if (forward != -backward) {
        std::ostringstream oss;
        oss << "c[" << e.i + 1 << "][" << e.j + 1 << "][" << k + 1 << "] = "
            << to_string(forward) << " but c[" << e.j + 1 << "][" << e.i + 1 << "]["
            << k + 1 << "] = " << to_string(backward);
        report.violations.push_back(
            {ViolationKind::antisymmetry, {e.i + 1, e.j + 1, k + 1}, oss.str()});
      }
    }
  }

  // Grading: every target of [e_i, e_j] must live in layer(i)+layer(j); in
  // particular the bracket vanishes when layer(i)+layer(j) > step.
  for (const BracketEntry& e : alg.raw_entries()) {
    const int want = alg.layer_of(e.i) + alg.layer_of(e.j);
    for (const BracketTerm& t : e.terms) {
      if (t.c == 0) continue;
      if (want > alg.step() || alg.layer_of(t.k) != want) {
        std::ostringstream oss;
        oss << "[" << alg.basis_label(e.i) << "," << alg.basis_label(e.j)
            << "] has a component on " << alg.basis_label(t.k) << " (layer "
            << alg.layer_of(t.k) << ", expected "
            << (want > alg.step() ? "zero" : "layer " + std::to_string(want)) << ")";
        report.violations.push_back(
            {ViolationKind::grading, {e.i + 1, e.j + 1, t.k + 1}, oss.str()});
      }
    }
  }

  // Jacobi identity on all basis triples.
  for (int i = 0; i < n; ++i) {
    AlgebraVector ei = basis_vector(alg, i);
    for (int j = i + 1; j < n; ++j) {
      AlgebraVector ej = basis_vector(alg, j);
      AlgebraVector bij = bracket(alg, ei, ej);
      for (int k = j + 1; k < n; ++k) {
        AlgebraVector ek = basis_vector(alg, k);
        AlgebraVector jac = bracket(alg, bij, ek) +
                            bracket(alg, bracket(alg, ej, ek), ei) +
                            bracket(alg, bracket(alg, ek, ei), ej);
        if (!jac.is_zero()) {
          report.violations.push_back({ViolationKind::jacobi,
                                       {i + 1, j + 1, k + 1},
                                       "jacobiator = " + describe_vector(alg, jac)});
        }
      }
    }
  }

  // Bracket generating: [g_1, g_l] must span g_{l+1}.
  for (int l = 1; l < alg.step(); ++l) {
    const int d1 = alg.first_layer_dim();
    const int dl = alg.layer_dim(l);
    const int dnext = alg.layer_dim(l + 1);
    RationalMatrix span(dnext, d1 * dl);
    int c = 0;
    for (int a = 0; a < d1; ++a) {
      for (int b = 0; b < dl; ++b, ++c) {
        AlgebraVector br = bracket(alg, basis_vector(alg, a),
                                   basis_vector(alg, alg.layer_start(l) + b));
        for (int r = 0; r < dnext; ++r)
          span.at(r, c) = br.coords[alg.layer_start(l + 1) + r];
      }
    }
    const int r = span.rank();
    if (r < dnext) {
      std::ostringstream oss;
      oss << "[g1, g" << l << "] spans a subspace of dimension " << r << " < " << dnext
          << " inside layer " << l + 1;
      report.violations.push_back({ViolationKind::bracket_generating, {l + 1}, oss.str()});
    }
  }

  return report;
}

}  // namespace carnot
