#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "carnot/matrix.hpp"
#include "carnot/rational.hpp"

namespace carnot {

/// Element of the algebra in the fixed basis (coefficients of e_1..e_n).
struct AlgebraVector {
  std::vector<Rational> coords;

  AlgebraVector() = default;
  explicit AlgebraVector(int dim) : coords(dim, Rational(0)) {}
  explicit AlgebraVector(std::vector<Rational> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;

  AlgebraVector operator+(const AlgebraVector& o) const;
  AlgebraVector operator-(const AlgebraVector& o) const;
  AlgebraVector operator-() const;
  AlgebraVector scaled(const Rational& s) const;
  bool operator==(const AlgebraVector& o) const { return coords == o.coords; }
};

struct BracketTerm {
  int k;       // 0-based basis index of the target
  Rational c;  // coefficient
};

/// One raw structure-constant entry [e_i, e_j] = sum_k c e_k, exactly as
/// provided by the caller (no canonicalization, so validation can report
/// ill-formed tables such as inconsistent (i,j)/(j,i) pairs).
struct BracketEntry {
  int i = 0;  // 0-based
  int j = 0;  // 0-based
  std::vector<BracketTerm> terms;
};

/// Stratified nilpotent Lie algebra given by layer dimensions and structure
/// constants on a basis ordered layer by layer. Immutable after construction;
/// all operations on it are pure, so instances can be shared across threads.
///
/// The constructor only enforces shape (positive layer dims, indices in
/// range); the Lie-algebra axioms are checked by validate(), which reports
/// every violation instead of throwing.
class StratifiedAlgebra {
 public:
  StratifiedAlgebra(std::string name, std::vector<int> layer_dims,
                    std::vector<BracketEntry> brackets,
                    std::vector<std::string> basis_labels = {});

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int step() const { return static_cast<int>(layer_dims_.size()); }
  const std::vector<int>& layer_dims() const { return layer_dims_; }
  int layer_dim(int layer) const { return layer_dims_.at(layer - 1); }

  /// Layer number (1-based) of basis index k (0-based).
  int layer_of(int k) const { return layer_of_.at(k); }
  /// First basis index (0-based) of a 1-based layer.
  int layer_start(int layer) const { return layer_start_.at(layer - 1); }
  int first_layer_dim() const { return layer_dims_[0]; }

  const std::string& basis_label(int k) const { return labels_.at(k); }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  /// Effective [e_i, e_j] used for computation: the raw entry when present,
  /// otherwise the negated mirror entry, otherwise zero.
  const std::vector<BracketTerm>& basis_bracket(int i, int j) const;

  /// Raw entries exactly as supplied (for validation and serialization).
  const std::vector<BracketEntry>& raw_entries() const { return raw_; }

 private:
  std::string name_;
  std::vector<int> layer_dims_;
  std::vector<int> layer_of_;
  std::vector<int> layer_start_;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<BracketEntry> raw_;
  std::vector<std::vector<BracketTerm>> table_;  // dense (i*n+j) lookup
};

enum class ViolationKind { antisymmetry, jacobi, grading, bracket_generating };

struct Violation {
  ViolationKind kind;
  std::vector<int> indices;  // 1-based basis indices (or layer for generating)
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

const char* to_string(ViolationKind kind);

/// Checks antisymmetry, the Jacobi identity on all basis triples, the layer
/// grading, and the bracket-generating property, all exactly. Empty report
/// means the table is a Carnot (stratified, layer-1-generated) algebra.
ValidationReport validate(const StratifiedAlgebra& alg);

AlgebraVector zero_vector(const StratifiedAlgebra& alg);
AlgebraVector basis_vector(const StratifiedAlgebra& alg, int k);

/// Lifts layer-1 coordinates (length d1) to a full algebra vector.
AlgebraVector embed_horizontal(const StratifiedAlgebra& alg,
                               const std::vector<Rational>& layer1_coords);

/// True when all coordinates outside layer 1 vanish.
bool is_horizontal(const StratifiedAlgebra& alg, const AlgebraVector& v);

/// Bilinear extension of the structure constants.
AlgebraVector bracket(const StratifiedAlgebra& alg, const AlgebraVector& a,
                      const AlgebraVector& b);

/// Grading dilation: coordinate k is scaled by lambda^layer(k).
AlgebraVector dilate_vector(const StratifiedAlgebra& alg, const Rational& lambda,
                            const AlgebraVector& v);

/// Diagonal matrix of dilate_vector.
RationalMatrix dilation_matrix(const StratifiedAlgebra& alg, const Rational& lambda);

/// Matrix of ad_x = [x, .] in the fixed basis.
RationalMatrix ad_matrix(const StratifiedAlgebra& alg, const AlgebraVector& x);

void check_dimension(const StratifiedAlgebra& alg, const AlgebraVector& v,
                     const char* what);

}  // namespace carnot
