#include "ferrers/ffpoly.hpp"

#include <algorithm>

#include "ferrers/board.hpp"

namespace ferrers {

Integer m_falling_factorial(const Integer& v, int k, int m) {
  if (k < 0) throw ValidationError("m_falling_factorial: k must be non-negative");
  require_level_size(m);
  Integer product = 1;
  for (int i = 0; i < k; ++i) product *= v - Integer(m) * i;
  return product;
}

Basis Basis::falling(int m) {
  require_level_size(m);
  return Basis(Kind::MFalling, m);
}

std::string Basis::name() const { return is_power() ? "power" : "mfalling"; }

FFPoly::FFPoly(Basis basis, std::vector<Integer> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {
  normalize();
}

FFPoly::FFPoly(Basis basis, std::initializer_list<std::int64_t> coeffs) : basis_(basis) {
  coeffs_.assign(coeffs.begin(), coeffs.end());
  normalize();
}

FFPoly FFPoly::constant(const Integer& c, Basis basis) { return FFPoly(basis, {c}); }

Integer FFPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

void FFPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void FFPoly::require_same_basis(const FFPoly& other) const {
  if (!(basis_ == other.basis_)) {
    throw BasisMismatch("cannot combine polynomials in bases " + basis_.name() + "(" +
                        std::to_string(basis_.m()) + ") and " + other.basis_.name() + "(" +
                        std::to_string(other.basis_.m()) + ")");
  }
}

FFPoly& FFPoly::operator+=(const FFPoly& other) {
  require_same_basis(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

FFPoly& FFPoly::operator-=(const FFPoly& other) {
  require_same_basis(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

FFPoly& FFPoly::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

FFPoly operator*(const FFPoly& a, const FFPoly& b) {
  if (!a.basis_.is_power() || !b.basis_.is_power()) {
    throw BasisMismatch("polynomial products are only defined in the power basis");
  }
  if (a.is_zero() || b.is_zero()) return FFPoly(Basis::power());
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return FFPoly(Basis::power(), std::move(out));
}

RootMultiset::RootMultiset(std::vector<std::int64_t> constants) : constants_(std::move(constants)) {
  std::sort(constants_.begin(), constants_.end());
}

RootMultiset::RootMultiset(std::initializer_list<std::int64_t> constants)
    : RootMultiset(std::vector<std::int64_t>(constants)) {}

namespace {

// Multiplies a power-basis coefficient vector in place by (x + c).
void multiply_linear(std::vector<Integer>& coeffs, const Integer& c) {
  coeffs.push_back(0);
  for (std::size_t i = coeffs.size() - 1; i > 0; --i) coeffs[i] = coeffs[i - 1] + c * coeffs[i];
  coeffs[0] *= c;
}

}  // namespace

FFPoly falling_basis_polynomial(int k, int m) {
  require_level_size(m);
  std::vector<Integer> coeffs{1};
  for (int i = 0; i < k; ++i) multiply_linear(coeffs, -Integer(m) * i);
  return FFPoly(Basis::power(), std::move(coeffs));
}

FFPoly expand_roots(const RootMultiset& roots) {
  std::vector<Integer> coeffs{1};
  for (std::int64_t c : roots.constants()) multiply_linear(coeffs, Integer(c));
  return FFPoly(Basis::power(), std::move(coeffs));
}

FFPoly to_basis(const FFPoly& p, const Basis& target) {
  if (p.basis() == target) return p;
  if (!p.basis().is_power()) {
    // Falling -> power: sum of a_k x↓_{k,m}.
    FFPoly power(Basis::power());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      if (p.coeffs()[k] == 0) continue;
      power += falling_basis_polynomial(static_cast<int>(k), p.basis().m()) * p.coeffs()[k];
    }
    return target.is_power() ? power : to_basis(power, target);
  }
  // Power -> falling: x↓_{k,m} is monic of degree k, so peel off the leading
  // coefficient with the highest remaining basis polynomial.
  std::vector<Integer> residual = p.coeffs();
  std::vector<Integer> out(residual.size());
  for (std::size_t k = residual.size(); k-- > 0;) {
    const Integer lead = residual[k];
    out[k] = lead;
    if (lead == 0) continue;
    const FFPoly basis_poly = falling_basis_polynomial(static_cast<int>(k), target.m());
    for (std::size_t i = 0; i <= k; ++i) residual[i] -= lead * basis_poly.coeffs()[i];
  }
  return FFPoly(target, std::move(out));
}

Integer eval(const FFPoly& p, const Integer& x) {
  const auto& c = p.coeffs();
  if (p.basis().is_power()) {
    Integer acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
  }
  Integer acc = 0;
  Integer term = 1;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) term *= x - Integer(p.basis().m()) * static_cast<std::int64_t>(k - 1);
    acc += c[k] * term;
  }
  return acc;
}

std::string to_display_string(const FFPoly& p) {
  const FFPoly power = to_basis(p, Basis::power());
  if (power.is_zero()) return "0";
  std::string out;
  for (std::size_t k = power.coeffs().size(); k-- > 0;) {
    const Integer& c = power.coeffs()[k];
    if (c == 0) continue;
    const Integer magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1 || k == 0) out += magnitude.str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace ferrers
