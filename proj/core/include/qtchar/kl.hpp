#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qtchar/tensor.hpp"

namespace qtchar {

/// Dense square matrix over Z[t, t^-1].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t n) : n_(n), a_(n * n) {}
  static PolyMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  TPoly& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const TPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  /// Entrywise t -> t^-1.
  PolyMatrix bar() const;
  /// Each entry evaluated at t = 1.
  std::vector<std::vector<TPoly::Coeff>> at_one() const;
  bool is_upper_unitriangular() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<TPoly> a_;
};

/// Inverse of an upper unitriangular matrix, by back substitution.
PolyMatrix unitriangular_inverse(const PolyMatrix& c);

/// The l-dominant monomials reachable from a top monomial P through standard
/// characters, with those characters. Elements are listed lowest first (a
/// linear extension of <=), so matrices indexed by them are upper triangular.
struct DominantPoset {
  DynkinDiagram diagram;
  std::vector<YMonomial> elements;
  std::vector<QCharacter> standard;  // standard[i] = chi_{q,t}(M_{elements[i]})

  std::size_t top() const { return elements.size() - 1; }
  std::optional<std::size_t> index_of(const YMonomial& m) const;
  bool leq(std::size_t i, std::size_t j) const;
};

/// Throws CapExceeded if the closure or any of its standard characters
/// outgrows the cache limits.
DominantPoset dominant_closure(const DynkinDiagram& d, const YMonomial& p, FundamentalCache& cache);

/// c(i, j) = coefficient of elements[i] in standard[j].
PolyMatrix c_matrix(const DominantPoset& poset);

/// u(t) = c^{-1}(t^{-1}) c(t).
PolyMatrix u_matrix(const PolyMatrix& c);

/// Unique Z with Z = bar(Z) u, unit diagonal and off-diagonal entries in
/// t^-1 Z[t^-1]. Columns are solved left to right; within a column every
/// entry only needs earlier columns. Throws InconsistencyError if u admits no
/// such solution.
PolyMatrix kl_solve(const PolyMatrix& u);

struct KLTables {
  DominantPoset poset;
  PolyMatrix c, c_inv, u, z;
};

KLTables kl_tables(const DynkinDiagram& d, const YMonomial& p, FundamentalCache& cache);

/// [M_p : L_q] = Z_{qp}(1); 0 when q is not in the closure of p.
TPoly::Coeff multiplicity(const DynkinDiagram& d, const YMonomial& p, const YMonomial& q,
                          FundamentalCache& cache);

/// chi_q(L_q) as a character with constant coefficients.
QCharacter simple_qchar_t1(const DynkinDiagram& d, const YMonomial& q, FundamentalCache& cache);

}  // namespace qtchar
