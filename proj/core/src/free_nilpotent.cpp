#include "carnot/free_nilpotent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace carnot {
namespace free_lie {

bool is_lyndon(const std::string& w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i)
    if (w.compare(w.substr(i)) >= 0) return false;
  return true;
}

std::vector<std::string> lyndon_words(int alphabet, int max_len) {
  if (alphabet < 1 || max_len < 1) return {};
  // Duval's generation, then regrouped by length.
  std::vector<std::string> words;
  std::string w = "a";
  while (true) {
    words.push_back(w);
    // Periodic extension to max_len, then increment the last non-maximal letter.
    std::string ext;
    while (static_cast<int>(ext.size()) < max_len) ext += w[ext.size() % w.size()];
    w = ext;
    while (!w.empty() && w.back() == 'a' + alphabet - 1) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  std::stable_sort(words.begin(), words.end(),
                   [](const std::string& x, const std::string& y) {
                     return x.size() != y.size() ? x.size() < y.size() : x < y;
                   });
  return words;
}

std::pair<std::string, std::string> standard_factorization(const std::string& w) {
  if (w.size() < 2) throw std::invalid_argument("standard_factorization: single letter");
  for (size_t i = 1; i < w.size(); ++i) {
    std::string v = w.substr(i);
    if (is_lyndon(v)) {
      // The first Lyndon proper suffix in left-to-right scan is the longest.
      return {w.substr(0, i), v};
    }
  }
  throw std::logic_error("standard_factorization: no Lyndon suffix (word not Lyndon?)");
}

Poly poly_mul(const Poly& a, const Poly& b, int max_len) {
  Poly out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      if (static_cast<int>(wa.size() + wb.size()) > max_len) continue;
      Rational c = ca * cb;
      if (c == 0) continue;
      auto [it, inserted] = out.try_emplace(wa + wb, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [w, c] : b) {
    auto [it, inserted] = out.try_emplace(w, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

namespace {

Poly expansion_memo(const std::string& w, std::map<std::string, Poly>& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  Poly result;
  if (w.size() == 1) {
    result[w] = 1;
  } else {
    auto [u, v] = standard_factorization(w);
    Poly pu = expansion_memo(u, memo);
    Poly pv = expansion_memo(v, memo);
    const int len = static_cast<int>(w.size());
    result = poly_sub(poly_mul(pu, pv, len), poly_mul(pv, pu, len));
  }
  memo[w] = result;
  return result;
}

}  // namespace

Poly bracketing_expansion(const std::string& lyndon_word) {
  if (!is_lyndon(lyndon_word))
    throw std::invalid_argument("bracketing_expansion: not a Lyndon word");
  std::map<std::string, Poly> memo;
  return expansion_memo(lyndon_word, memo);
}

}  // namespace free_lie

StratifiedAlgebra free_nilpotent(int generators, int step,
                                 const FreeNilpotentOptions& opts) {
  if (generators < 2) throw std::invalid_argument("free_nilpotent: need at least 2 generators");
  if (step < 1) throw std::invalid_argument("free_nilpotent: step must be positive");
  if (generators > 26) throw std::invalid_argument("free_nilpotent: too many generators");

  using free_lie::Poly;

  const std::vector<std::string> words = free_lie::lyndon_words(generators, step);
  const int n = static_cast<int>(words.size());
  if (n > opts.dim_cap) {
    std::ostringstream oss;
    oss << "free_nilpotent(" << generators << ", " << step << "): dimension " << n
        << " exceeds cap " << opts.dim_cap;
    throw std::invalid_argument(oss.str());
  }

  std::vector<int> layer_dims(step, 0);
  std::map<std::string, int> index_of;
  for (int k = 0; k < n; ++k) {
    layer_dims[words[k].size() - 1] += 1;
    index_of[words[k]] = k;
  }

  std::map<std::string, Poly> memo;
  std::vector<Poly> expansion(n);
  for (int k = 0; k < n; ++k) expansion[k] = free_lie::expansion_memo(words[k], memo);

  std::vector<BracketEntry> entries;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int weight = static_cast<int>(words[i].size() + words[j].size());
      if (weight > step) continue;
      Poly rem = free_lie::poly_sub(free_lie::poly_mul(expansion[i], expansion[j], weight),
                                    free_lie::poly_mul(expansion[j], expansion[i], weight));
      // Peel off basis bracketings by their triangular leading words: the
      // smallest word in the support of a homogeneous Lie element is Lyndon
      // and carries coefficient 1 inside its own bracketing expansion.
      std::vector<BracketTerm> terms;
      while (!rem.empty()) {
        const std::string& lead = rem.begin()->first;
        if (!free_lie::is_lyndon(lead))
          throw std::logic_error("free_nilpotent: non-Lyndon leading word " + lead);
        const Rational c = rem.begin()->second;
        Poly pw = free_lie::expansion_memo(lead, memo);
        Poly scaled;
        for (const auto& [w, q] : pw) scaled[w] = q * c;
        rem = free_lie::poly_sub(rem, scaled);
        terms.push_back({index_of.at(lead), c});
      }
      if (!terms.empty()) {
        std::sort(terms.begin(), terms.end(),
                  [](const BracketTerm& a, const BracketTerm& b) { return a.k < b.k; });
        entries.push_back({i, j, std::move(terms)});
      }
    }
  }

  std::ostringstream name;
  name << "free(" << generators << "," << step << ")";
  return StratifiedAlgebra(name.str(), layer_dims, std::move(entries), words);
}

}  // namespace carnot
