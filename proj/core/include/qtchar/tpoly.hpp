#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace qtchar {

/// Laurent polynomial in a single variable t with exact integer coefficients.
///
/// Stored densely as a lowest exponent plus a coefficient run. Both ends of
/// the run are nonzero, so the zero polynomial is the empty run. Arithmetic
/// is checked: an int64 overflow throws std::overflow_error instead of
/// wrapping.
class TPoly {
 public:
  using Coeff = std::int64_t;

  TPoly() = default;
  /// The constant polynomial c.
  TPoly(Coeff c);  // NOLINT(google-explicit-constructor)

  /// c * t^e
  static TPoly monomial(int e, Coeff c = 1);
  static TPoly from_terms(const std::map<int, Coeff>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  /// Only meaningful when nonzero.
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Coeff coefficient(int e) const;
  Coeff constant_term() const { return coefficient(0); }
  /// Nonzero terms in ascending exponent order.
  std::map<int, Coeff> terms() const;

  Coeff eval_at_one() const;
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  bool has_negative_coefficient() const;

  /// Multiplication by t^k.
  TPoly shifted(int k) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  TPoly& operator*=(Coeff c);
  TPoly operator-() const;

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend bool operator==(const TPoly& a, const TPoly& b) {
    return a.is_zero() ? b.is_zero() : (a.low_ == b.low_ && a.coeffs_ == b.coeffs_);
  }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  /// "t^2 + 1 + t^-2", "-3t", "0".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.to_string(); }

  size_t hash() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

/// t -> t^-1.
TPoly bar(const TPoly& p);

/// Balanced quantum integer [m]_t = t^{m-1} + t^{m-3} + ... + t^{1-m}.
TPoly quantum_integer(int m);

/// Balanced Gaussian binomial; zero when r < 0 or r > n.
TPoly t_binomial(int n, int r);

/// t^{r(n-r)} [n r]_t, the weight of the r-th entry of a length-n string.
TPoly string_weight(int n, int r);

/// Terms with strictly negative exponent.
TPoly negative_part(const TPoly& p);

}  // namespace qtchar

template <>
struct std::hash<qtchar::TPoly> {
  size_t operator()(const qtchar::TPoly& p) const noexcept { return p.hash(); }
};
