#include "qtchar/tpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qtchar/error.hpp"

namespace qtchar {

namespace {

TPoly::Coeff checked_add(TPoly::Coeff a, TPoly::Coeff b) {
  TPoly::Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("TPoly coefficient overflow");
  return r;
}

TPoly::Coeff checked_mul(TPoly::Coeff a, TPoly::Coeff b) {
  TPoly::Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("TPoly coefficient overflow");
  return r;
}

}  // namespace

TPoly::TPoly(Coeff c) {
  if (c != 0) coeffs_.push_back(c);
}

TPoly TPoly::monomial(int e, Coeff c) {
  TPoly p(c);
  if (c != 0) p.low_ = e;
  return p;
}

TPoly TPoly::from_terms(const std::map<int, Coeff>& terms) {
  TPoly p;
  for (const auto& [e, c] : terms) p += monomial(e, c);
  return p;
}

TPoly::Coeff TPoly::coefficient(int e) const {
  if (is_zero() || e < low_ || e > max_exponent()) return 0;
  return coeffs_[static_cast<size_t>(e - low_)];
}

std::map<int, TPoly::Coeff> TPoly::terms() const {
  std::map<int, Coeff> out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

TPoly::Coeff TPoly::eval_at_one() const {
  Coeff s = 0;
  for (Coeff c : coeffs_) s = checked_add(s, c);
  return s;
}

bool TPoly::has_negative_coefficient() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c < 0; });
}

TPoly TPoly::shifted(int k) const {
  TPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

void TPoly::trim() {
  size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<Coeff>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                 coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    low_ += static_cast<int>(first);
  }
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(max_exponent(), o.max_exponent());
  if (lo < low_ || hi > max_exponent()) {
    std::vector<Coeff> grown(static_cast<size_t>(hi - lo + 1), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), grown.begin() + (low_ - lo));
    coeffs_ = std::move(grown);
    low_ = lo;
  }
  for (size_t i = 0; i < o.coeffs_.size(); ++i) {
    auto& slot = coeffs_[static_cast<size_t>(o.low_ - low_) + i];
    slot = checked_add(slot, o.coeffs_[i]);
  }
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) { return *this += -o; }

TPoly TPoly::operator-() const {
  TPoly p = *this;
  for (auto& c : p.coeffs_) c = checked_mul(c, -1);
  return p;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  TPoly p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      p.coeffs_[i + j] = checked_add(p.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  p.trim();
  return p;
}

TPoly& TPoly::operator*=(const TPoly& o) { return *this = *this * o; }

TPoly& TPoly::operator*=(Coeff c) {
  for (auto& x : coeffs_) x = checked_mul(x, c);
  trim();
  return *this;
}

std::string TPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = max_exponent(); e >= low_; --e) {
    Coeff c = coefficient(e);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Coeff mag = c < 0 ? -c : c;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

size_t TPoly::hash() const {
  size_t h = std::hash<int>{}(low_);
  for (Coeff c : coeffs_) h = h * 1000003u ^ std::hash<Coeff>{}(c);
  return h;
}

TPoly bar(const TPoly& p) {
  TPoly out;
  for (const auto& [e, c] : p.terms()) out += TPoly::monomial(-e, c);
  return out;
}

TPoly quantum_integer(int m) {
  if (m < 0) return -quantum_integer(-m);
  TPoly out;
  for (int e = m - 1; e >= 1 - m; e -= 2) out += TPoly::monomial(e);
  return out;
}

namespace {

// Gaussian binomial in q = t^2, via q-Pascal: G(n,r) = G(n-1,r-1) + q^r G(n-1,r).
TPoly gaussian_in_t_squared(int n, int r) {
  std::vector<TPoly> row{TPoly(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<TPoly> next(static_cast<size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
      TPoly v;
      if (j >= 1) v += row[static_cast<size_t>(j - 1)];
      if (j <= m - 1) v += row[static_cast<size_t>(j)].shifted(2 * j);
      next[static_cast<size_t>(j)] = std::move(v);
    }
    row = std::move(next);
  }
  return row[static_cast<size_t>(r)];
}

}  // namespace

TPoly t_binomial(int n, int r) {
  if (n < 0) throw InvalidInput("t_binomial requires n >= 0");
  if (r < 0 || r > n) return {};
  return gaussian_in_t_squared(n, r).shifted(-r * (n - r));
}

TPoly string_weight(int n, int r) {
  if (n < 0 || r < 0 || r > n) {
    throw InvalidInput("string_weight requires 0 <= r <= n (got n=" + std::to_string(n) +
                       ", r=" + std::to_string(r) + ")");
  }
  return gaussian_in_t_squared(n, r);
}

TPoly negative_part(const TPoly& p) {
  TPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e < 0) out += TPoly::monomial(e, c);
  }
  return out;
}

}  // namespace qtchar
