#pragma once

#include <vector>

#include "pitop/cyclo.hpp"
#include "pitop/group.hpp"
#include "pitop/report.hpp"

namespace pitop {

/// Group-order cap for the O(n^4) verifiers.
inline int g_max_tuple_group_order = 64;

/// Data (a, b, c, theta) of a pointlike ribbon crossed category, as dense tables.
struct RibbonTuple {
  FiniteGroup group;
  long order = 1;  // cyclotomic order N of the ground field
  std::vector<CycloNum> a;      // n^3, index (x*n + y)*n + z
  std::vector<CycloNum> b;      // n
  std::vector<CycloNum> c;      // n^2, index x*n + y
  std::vector<CycloNum> theta;  // n when has_theta
  bool has_theta = false;

  static RibbonTuple ones(const FiniteGroup& g, long order);
  /// Builds from integer exponents of zeta_N; theta may be empty.
  static RibbonTuple from_exponents(const FiniteGroup& g, long order, const std::vector<long>& a_exp,
                                    const std::vector<long>& b_exp, const std::vector<long>& c_exp,
                                    const std::vector<long>& theta_exp);

  int n() const { return group.order(); }
  const CycloNum& A(int x, int y, int z) const { return a[(x * n() + y) * n() + z]; }
  CycloNum& A(int x, int y, int z) { return a[(x * n() + y) * n() + z]; }
  const CycloNum& C(int x, int y) const { return c[x * n() + y]; }
  CycloNum& C(int x, int y) { return c[x * n() + y]; }
  bool a_trivial() const;

  friend bool operator==(const RibbonTuple& s, const RibbonTuple& t);
};

/// Conjugation-invariant 2-cochain eta: pi x pi -> K*.
struct TwoCochain {
  FiniteGroup group;
  long order = 1;
  std::vector<CycloNum> eta;  // n^2
  const CycloNum& E(int x, int y) const { return eta[x * group.order() + y]; }
};

Report verify_associator(const RibbonTuple& t);
Report verify_braiding(const RibbonTuple& t);
Report verify_twist(const RibbonTuple& t);
/// All three verifiers merged; the twist part only when theta is present.
Report verify_tuple(const RibbonTuple& t);

/// Homomorphisms pi -> {+1, -1}, as sign tables.
std::vector<std::vector<int>> sign_characters(const FiniteGroup& g);
/// theta_x = chi(x) c_{x,x}; throws if chi is not a homomorphism into {+1,-1}.
std::vector<CycloNum> canonical_twist(const RibbonTuple& t, const std::vector<CycloNum>& chi);
std::vector<CycloNum> canonical_twist(const RibbonTuple& t, const std::vector<int>& signs);
/// True when theta1/theta2 is a homomorphism into {+1,-1}.
bool twist_ratio_is_sign_character(const FiniteGroup& g, const std::vector<CycloNum>& theta1,
                                   const std::vector<CycloNum>& theta2);

/// a and c from a conjugation-invariant eta; b = 1 and theta unset.
RibbonTuple coboundary(const TwoCochain& eta);

struct DerivedIdentities {
  Report report;
  std::vector<CycloNum> d;  // duality constants from the first expression
};
DerivedIdentities derived_identities(const RibbonTuple& t);

RibbonTuple tuple_product(const RibbonTuple& s, const RibbonTuple& t);
RibbonTuple tuple_mirror(const RibbonTuple& t);

/// Characters pi -> mu_N as exponent tables (value zeta_N^e).
std::vector<std::vector<long>> characters(const FiniteGroup& g, long order);
/// All tuples with a = 1, b = 1, c a bicharacter into mu_N, theta_x = c_{x,x}.
std::vector<RibbonTuple> enumerate_bicharacter_tuples(const FiniteGroup& g, long order);

}  // namespace pitop
