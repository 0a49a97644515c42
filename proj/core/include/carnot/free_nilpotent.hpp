#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "carnot/algebra.hpp"

namespace carnot {

struct FreeNilpotentOptions {
  int dim_cap = 30;  // refuse to build algebras larger than this
};

/// Free nilpotent stratified algebra on `generators` generators truncated at
/// `step`. Basis: Lyndon words ordered by length then lexicographically, with
/// the bracketing given by the standard factorization; layer k = words of
/// length k. Throws std::invalid_argument for generators < 2, step < 1, or
/// when the dimension cap is exceeded.
StratifiedAlgebra free_nilpotent(int generators, int step,
                                 const FreeNilpotentOptions& opts = {});

/// Word-level machinery, exposed so tests can cross-check the construction.
namespace free_lie {

/// Non-commutative polynomial: word over 'a','b',... mapped to coefficient.
using Poly = std::map<std::string, Rational>;

/// True when w is strictly smaller than each of its proper suffixes.
bool is_lyndon(const std::string& w);

/// All Lyndon words over the first `alphabet` letters of length <= max_len,
/// ordered by (length, lex).
std::vector<std::string> lyndon_words(int alphabet, int max_len);

/// w = u v with v the longest proper Lyndon suffix; u is then Lyndon, u < v.
std::pair<std::string, std::string> standard_factorization(const std::string& w);

Poly poly_mul(const Poly& a, const Poly& b, int max_len);
Poly poly_sub(const Poly& a, const Poly& b);

/// Expansion in the free associative algebra of the bracketing of a Lyndon
/// word: a letter expands to itself, and [u, v] to uv - vu.
Poly bracketing_expansion(const std::string& lyndon_word);

}  // namespace free_lie

}  // namespace carnot
