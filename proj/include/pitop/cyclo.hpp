#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pitop {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long euler_phi(long n);
long lcm_order(long a, long b);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_poly(long n);

/// Exact element of Q(zeta_N), stored in the power basis modulo Phi_N.
///
/// Values of different order combine after lifting both to the lcm.
/// Zero and the rationals default to order 1.
class CycloNum {
 public:
  CycloNum();
  CycloNum(long v);  // NOLINT(google-explicit-constructor)
  CycloNum(const mpq_class& q);  // NOLINT(google-explicit-constructor)
  CycloNum(long order, std::vector<mpq_class> coeffs);

  static CycloNum root(long n, long k);
  static CycloNum rational(const mpq_class& q, long order = 1);

  long order() const { return n_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  mpq_class rational_part() const { return c_[0]; }

  CycloNum lifted(long m) const;
  /// Smallest-order representative of the same field element.
  CycloNum compact() const;
  /// Express in Q(zeta_m) if the value lies there.
  std::optional<CycloNum> descend(long m) const;

  CycloNum operator-() const;
  CycloNum inv() const;
  CycloNum pow(long e) const;
  CycloNum conj() const;

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
  CycloNum& operator+=(const CycloNum& b) { return *this = *this + b; }
  CycloNum& operator-=(const CycloNum& b) { return *this = *this - b; }
  CycloNum& operator*=(const CycloNum& b) { return *this = *this * b; }
  CycloNum& operator/=(const CycloNum& b) { return *this = *this / b; }

  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  /// If the value equals zeta_m^k for some m dividing lcm(order, 2), return k mod m
  /// together with m.
  std::optional<std::pair<long, long>> as_root_of_unity() const;

  /// "1/2 + 3*zeta4^1"; "0" for zero.
  std::string str() const;
  std::complex<double> to_complex() const;

  /// Total order used for deterministic containers; not a field order.
  friend bool canonical_less(const CycloNum& a, const CycloNum& b);

 private:
  void reduce_poly(std::vector<mpq_class>& p) const;
  long n_;
  std::vector<mpq_class> c_;
};

std::ostream& operator<<(std::ostream& os, const CycloNum& x);

/// Square root inside Q(zeta_order(x)) (or of the requested order).
/// The returned root is the one with positive real part, or positive imaginary
/// part when the real part vanishes; `negate` picks the other one.
/// Throws DomainError naming a sufficient cyclotomic order when no root exists
/// in the requested field.
CycloNum sqrt_in_field(const CycloNum& x, long field_order, bool negate = false);

}  // namespace pitop
