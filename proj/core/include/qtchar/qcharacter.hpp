#pragma once

#include <functional>
#include <map>

#include "qtchar/cartan.hpp"
#include "qtchar/tpoly.hpp"
#include "qtchar/ymonomial.hpp"

namespace qtchar {

/// Sum of monomials in Y_{k,a}^{+-1} with coefficients in Z[t, t^-1], together
/// with the l-highest monomial it was generated from.
class QCharacter {
 public:
  using Terms = std::map<YMonomial, TPoly>;

  /// The character consisting of `highest` alone with coefficient 1.
  QCharacter(DynkinDiagram diagram, YMonomial highest);
  QCharacter(DynkinDiagram diagram, YMonomial highest, Terms terms);

  /// The trivial module: the empty monomial with coefficient 1.
  static QCharacter trivial(const DynkinDiagram& d) { return QCharacter(d, YMonomial{}); }

  const DynkinDiagram& diagram() const { return diagram_; }
  const YMonomial& highest() const { return highest_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  TPoly coefficient(const YMonomial& m) const;

  /// Adds c to the coefficient of m, dropping the entry if it cancels.
  void add(const YMonomial& m, const TPoly& c);

  /// Adds n to every step.
  QCharacter shifted(int n) const;
  QCharacter relocated(const std::function<Spectral(Spectral)>& f) const;
  /// Each coefficient replaced by its value at t = 1.
  QCharacter at_t_equal_one() const;
  QCharacter map_coefficients(const std::function<TPoly(const YMonomial&, const TPoly&)>& f) const;

  /// Sum of coefficients at t = 1.
  TPoly::Coeff dimension() const;

  /// Coefficient of highest is 1, every monomial lies below highest, and every
  /// coefficient has nonnegative integer coefficients. Throws
  /// InconsistencyError naming the first violation.
  void check_invariants() const;

  friend bool operator==(const QCharacter& a, const QCharacter& b) {
    return a.diagram_ == b.diagram_ && a.highest_ == b.highest_ && a.terms_ == b.terms_;
  }

 private:
  DynkinDiagram diagram_;
  YMonomial highest_;
  Terms terms_;
};

/// Plain (untwisted) product; highest monomials multiply.
QCharacter plain_product(const QCharacter& a, const QCharacter& b);

/// Multiplies the coefficient of each m by t^{d(m, m_P)}. Asserts that every
/// result is a polynomial in t with nonzero constant term.
QCharacter tilde(const QCharacter& chi);

/// Inverse of tilde, without the postcondition.
QCharacter untilde(const QCharacter& chi_tilde);

}  // namespace qtchar
