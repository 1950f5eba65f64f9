#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "ferrers/integer.hpp"

namespace ferrers {

/// v(v - m)(v - 2m)...(v - (k-1)m); the empty product (k = 0) is 1.
Integer m_falling_factorial(const Integer& v, int k, int m);

/// Either the monomial basis x^k or the m-falling-factorial basis x↓_{k,m}.
class Basis {
 public:
  enum class Kind { Power, MFalling };

  static Basis power() { return Basis(Kind::Power, 0); }
  static Basis falling(int m);

  Kind kind() const { return kind_; }
  bool is_power() const { return kind_ == Kind::Power; }
  /// Only meaningful for MFalling.
  int m() const { return m_; }

  std::string name() const;

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  Basis(Kind kind, int m) : kind_(kind), m_(m) {}

  Kind kind_;
  int m_;
};

/// Arithmetic between polynomials tagged with different bases.
class BasisMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dense exact-integer polynomial, coefficients low to high in its basis.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class FFPoly {
 public:
  explicit FFPoly(Basis basis = Basis::power()) : basis_(basis) {}
  FFPoly(Basis basis, std::vector<Integer> coeffs);
  FFPoly(Basis basis, std::initializer_list<std::int64_t> coeffs);

  static FFPoly constant(const Integer& c, Basis basis = Basis::power());

  const Basis& basis() const { return basis_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient k, zero past the degree.
  Integer coeff(std::size_t k) const;

  FFPoly& operator+=(const FFPoly& other);
  FFPoly& operator-=(const FFPoly& other);
  FFPoly& operator*=(const Integer& scalar);

  friend FFPoly operator+(FFPoly a, const FFPoly& b) { return a += b; }
  friend FFPoly operator-(FFPoly a, const FFPoly& b) { return a -= b; }
  friend FFPoly operator*(FFPoly a, const Integer& s) { return a *= s; }

  /// Product of two power-basis polynomials.
  friend FFPoly operator*(const FFPoly& a, const FFPoly& b);

  /// Structural: same basis and same coefficients.
  friend bool operator==(const FFPoly&, const FFPoly&) = default;

 private:
  void normalize();
  void require_same_basis(const FFPoly& other) const;

  Basis basis_;
  std::vector<Integer> coeffs_;
};

/// Multiset of constants c_i standing for the product of (x + c_i).
class RootMultiset {
 public:
  RootMultiset() = default;
  explicit RootMultiset(std::vector<std::int64_t> constants);
  RootMultiset(std::initializer_list<std::int64_t> constants);

  /// Sorted ascending.
  const std::vector<std::int64_t>& constants() const { return constants_; }
  std::size_t size() const { return constants_.size(); }

  friend bool operator==(const RootMultiset&, const RootMultiset&) = default;

 private:
  std::vector<std::int64_t> constants_;
};

/// The polynomial x↓_{k,m} written in the power basis.
FFPoly falling_basis_polynomial(int k, int m);

/// Power-basis coefficients of the product of (x + c_i).
FFPoly expand_roots(const RootMultiset& roots);

/// Re-expresses p in the target basis. Exact in both directions.
FFPoly to_basis(const FFPoly& p, const Basis& target);

Integer eval(const FFPoly& p, const Integer& x);

/// Human-readable power-basis rendering, e.g. "x^4 + 2x^3 + x^2".
std::string to_display_string(const FFPoly& p);

}  // namespace ferrers
