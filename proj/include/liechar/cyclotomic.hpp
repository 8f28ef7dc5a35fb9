#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "liechar/types.hpp"

namespace liechar {

/// Element of Q(zeta_n) in canonical form: coefficients of zeta_n^0 ..
/// zeta_n^(phi(n)-1) after reduction modulo Phi_n, with n the smallest
/// conductor of a cyclotomic field containing the element. Rationals have
/// n == 1; n is never 2 mod 4.
class Cyclotomic {
public:
  Cyclotomic() : coeffs_{Rational(0)} {}
  Cyclotomic(int value) : coeffs_{Rational(value)} {}  // NOLINT: scalar conversions for Eigen
  Cyclotomic(std::int64_t value) : coeffs_{Rational(value)} {}  // NOLINT
  Cyclotomic(const Rational& value) : coeffs_{value} {}  // NOLINT

  /// zeta_n^k.
  static Cyclotomic root_of_unity(std::int64_t n, std::int64_t k = 1);
  /// sum_k counts[k] zeta_n^k for an integer exponent histogram of length n.
  static Cyclotomic from_exponent_counts(std::int64_t n, const std::vector<std::int64_t>& counts);
  /// sum c * zeta_n^e over the map; exponents may be any integers.
  static Cyclotomic from_terms(std::int64_t n, const std::map<std::int64_t, Rational>& terms);

  std::int64_t conductor() const { return n_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Non-zero coefficients by exponent in the canonical basis.
  std::map<std::int64_t, Rational> terms() const;

  bool is_zero() const;
  bool is_rational() const { return n_ == 1; }
  bool is_integral() const;
  Rational rational_value() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic inverse() const;
  /// zeta -> zeta^k. Throws NotCoprime unless gcd(k, conductor) == 1.
  Cyclotomic galois(std::int64_t k) const;
  Cyclotomic conjugate() const { return galois(-1); }

  /// Image under zeta_N -> w for w of multiplicative order N modulo the
  /// prime ell, where the conductor divides N.
  std::int64_t reduce_mod(std::int64_t ell, std::int64_t N, std::int64_t w) const;

  /// "c0 + c1*z(n)^1 + ..." form.
  std::string to_text() const;

private:
  Cyclotomic(std::int64_t n, std::vector<Rational> coeffs);
  void normalize();
  /// Coefficients with respect to the basis of Q(zeta_N), n | N.
  std::vector<Rational> lifted(std::int64_t N) const;

  std::int64_t n_ = 1;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::int64_t invmod(std::int64_t a, std::int64_t mod);
bool is_prime(std::int64_t n);
/// Element of multiplicative order exactly n modulo the prime ell (n | ell - 1).
std::int64_t root_of_unity_mod(std::int64_t ell, std::int64_t n);

}  // namespace liechar

namespace Eigen {
template <>
struct NumTraits<liechar::Cyclotomic> : GenericNumTraits<liechar::Cyclotomic> {
  typedef liechar::Cyclotomic Real;
  typedef liechar::Cyclotomic NonInteger;
  typedef liechar::Cyclotomic Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 50,
    MulCost = 200,
  };
};
}  // namespace Eigen

namespace liechar {
using CycMatrix = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, Eigen::Dynamic>;
using CycRow = Eigen::Matrix<Cyclotomic, 1, Eigen::Dynamic>;
}  // namespace liechar
