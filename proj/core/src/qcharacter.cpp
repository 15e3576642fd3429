#include "qtchar/qcharacter.hpp"

#include "qtchar/error.hpp"

namespace qtchar {

QCharacter::QCharacter(DynkinDiagram diagram, YMonomial highest)
    : diagram_(std::move(diagram)), highest_(std::move(highest)) {
  terms_.emplace(highest_, TPoly(1));
}

QCharacter::QCharacter(DynkinDiagram diagram, YMonomial highest, Terms terms)
    : diagram_(std::move(diagram)), highest_(std::move(highest)) {
  for (auto& [m, c] : terms) {
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
  }
}

TPoly QCharacter::coefficient(const YMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? TPoly{} : it->second;
}

void QCharacter::add(const YMonomial& m, const TPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QCharacter QCharacter::shifted(int n) const {
  return relocated([n](Spectral s) { return s.shifted(n); });
}

QCharacter QCharacter::relocated(const std::function<Spectral(Spectral)>& f) const {
  Terms moved;
  for (const auto& [m, c] : terms_) moved.emplace(m.relocated(f), c);
  return QCharacter(diagram_, highest_.relocated(f), std::move(moved));
}

QCharacter QCharacter::at_t_equal_one() const {
  return map_coefficients([](const YMonomial&, const TPoly& c) { return TPoly(c.eval_at_one()); });
}

QCharacter QCharacter::map_coefficients(
    const std::function<TPoly(const YMonomial&, const TPoly&)>& f) const {
  Terms out;
  for (const auto& [m, c] : terms_) out.emplace(m, f(m, c));
  return QCharacter(diagram_, highest_, std::move(out));
}

TPoly::Coeff QCharacter::dimension() const {
  TPoly::Coeff s = 0;
  for (const auto& [m, c] : terms_) s += c.eval_at_one();
  return s;
}

void QCharacter::check_invariants() const {
  if (coefficient(highest_) != TPoly(1)) {
    throw InconsistencyError("coefficient of the highest monomial " + highest_.to_string() +
                             " is " + coefficient(highest_).to_string() + ", expected 1");
  }
  for (const auto& [m, c] : terms_) {
    if (c.has_negative_coefficient()) {
      throw InconsistencyError("negative coefficient " + c.to_string() + " at " + m.to_string());
    }
    if (!leq(diagram_, m, highest_)) {
      throw InconsistencyError(m.to_string() + " does not lie below " + highest_.to_string());
    }
  }
}

QCharacter plain_product(const QCharacter& a, const QCharacter& b) {
  if (!(a.diagram() == b.diagram())) throw InvalidInput("product of characters of different types");
  QCharacter out(a.diagram(), a.highest() * b.highest(), {});
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add(ma * mb, ca * cb);
  }
  return out;
}

QCharacter tilde(const QCharacter& chi) {
  return chi.map_coefficients([&](const YMonomial& m, const TPoly& c) {
    TPoly out = c.shifted(d_self(chi.diagram(), m, chi.highest()));
    if (out.min_exponent() != 0) {
      throw InconsistencyError("modified coefficient " + out.to_string() + " at " + m.to_string() +
                               " is not a polynomial with nonzero constant term");
    }
    return out;
  });
}

QCharacter untilde(const QCharacter& chi_tilde) {
  return chi_tilde.map_coefficients([&](const YMonomial& m, const TPoly& c) {
    return c.shifted(-d_self(chi_tilde.diagram(), m, chi_tilde.highest()));
  });
}

}  // namespace qtchar
