#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qtchar/tensor.hpp"

namespace qtchar {

/// Weight in fundamental-weight coordinates; entry k-1 is the coefficient of
/// Lambda_k.
using Weight = std::vector<int>;

/// Parses "w1,w2,...,wn" (exactly rank entries, all >= 0).
Weight parse_weight(const DynkinDiagram& d, std::string_view text);
/// "2L1 + L3", or "0" for the zero weight.
std::string weight_to_string(const Weight& w);

/// prod_k Y_{k, eps^{m(k)}}^{w_k} in orbit 0.
YMonomial canonical_P(const DynkinDiagram& d, const Weight& w, const HeightFunction& h);

/// Image of chi~_{q,t}(M_P) under Y_{k,a} -> y_k.
struct OrdinaryTCharacter {
  struct Entry {
    TPoly coefficient;
    int depth = 0;  // height of (top - weight) in simple roots
  };
  Weight top;
  std::map<Weight, Entry> terms;

  TPoly coefficient(const Weight& w) const;
  /// Dominant weights with nonzero coefficient, sorted by (depth, weight).
  std::vector<Weight> dominant_weights() const;
};

OrdinaryTCharacter chi_t_ordinary(const DynkinDiagram& d, const YMonomial& p, FundamentalCache& cache);

/// Multiplicity of weight w2 in the simple finite-type module of highest
/// weight w: the constant term of the coefficient of w2 in
/// chi_t_ordinary(canonical_P(w)).
TPoly::Coeff weight_multiplicity(const DynkinDiagram& d, const Weight& w, const Weight& w2,
                                 const HeightFunction& h, FundamentalCache& cache);

struct BranchingRow {
  Weight weight;
  TPoly c;                    // coefficient of y^weight in chi_t_ordinary(canonical_P(w))
  TPoly::Coeff multiplicity;  // Z_{weight, w}
};

/// Decomposition of the restriction of M_{canonical_P(w)} into finite-type
/// simples, solved by back substitution from the top weight. Rows are sorted
/// by (depth, weight) and include zero multiplicities.
std::vector<BranchingRow> branching(const DynkinDiagram& d, const Weight& w, const HeightFunction& h,
                                    FundamentalCache& cache);

}  // namespace qtchar
