#pragma once

#include <string>
#include <vector>

#include "pitop/cyclo.hpp"
#include "pitop/group.hpp"
#include "pitop/report.hpp"

namespace pitop {

using Vec = std::vector<CycloNum>;

/// Element of a tensor product of finite-dimensional spaces, flattened row-major.
struct Tens {
  std::vector<int> dims;
  Vec v;
  static Tens zero(std::vector<int> dims);
  static Tens of(const Vec& x);  // one factor
  int size() const { return static_cast<int>(v.size()); }
  friend bool operator==(const Tens& a, const Tens& b);
};

/// Associative unital algebra on a basis: mul[(i*n + j)*n + k] is the coefficient
/// of e_k in e_i e_j.
struct Alg {
  int n = 0;
  Vec mul;
  Vec unit;
  Vec product(const Vec& a, const Vec& b) const;
  Vec basis(int i) const;
  friend bool operator==(const Alg&, const Alg&) = default;
};

/// Linear map matrices are stored as m[i*n_out + j] = coefficient of e_j in f(e_i).
Vec apply(const Vec& m, int n_in, int n_out, const Vec& x);
Vec compose(const Vec& f, const Vec& g, int n0, int n1, int n2);  // f after g: n0 -> n1 -> n2
Vec identity_map(int n);

struct HopfAlgebraData {
  std::string name;
  Alg alg;
  Vec comul;     // n^3: coefficient of e_j (x) e_k in Delta(e_i) at (i*n + j)*n + k
  Vec counit;    // n
  Vec antipode;  // n^2
  friend bool operator==(const HopfAlgebraData&, const HopfAlgebraData&) = default;
};

/// Family {A_alpha} with comultiplications, counit, antipodes and crossing maps.
struct PiCoalgebra {
  std::string name;
  FiniteGroup group;
  std::vector<Alg> alg;      // per alpha
  std::vector<Vec> comul;    // [alpha*G + beta]: A_{alpha beta} -> A_alpha (x) A_beta
  Vec counit;                // on A_1
  std::vector<Vec> antipode; // [alpha]: A_alpha -> A_{alpha^-1}
  std::vector<Vec> phi;      // [alpha*G + beta]: A_beta -> A_{alpha beta alpha^-1}
  int G() const { return group.order(); }
  int dim(int alpha) const { return alg[alpha].n; }
  friend bool operator==(const PiCoalgebra& a, const PiCoalgebra& b);
};

struct RibbonFamily {
  std::vector<Vec> R;      // [alpha*G + beta] in A_alpha (x) A_beta
  std::vector<Vec> theta;  // [alpha] in A_alpha; empty when only an R-matrix is given
  friend bool operator==(const RibbonFamily&, const RibbonFamily&) = default;
};

/// Hopf algebra as a pi-coalgebra over the trivial group.
PiCoalgebra as_pi_coalgebra(const HopfAlgebraData& h);

Report verify_hopf(const HopfAlgebraData& h);
/// Algebra, coassociativity, counit, multiplicativity of the comultiplication and
/// counit, antipode anti-isomorphisms and the antipode identity.
Report verify_pi_coalgebra(const PiCoalgebra& a);
/// Crossing maps: algebra isomorphisms preserving counit, antipode and comultiplication,
/// forming an action.
Report verify_crossed(const PiCoalgebra& a);
/// Invertibility, the R-conjugation identity, both comultiplication identities,
/// invariance under the action and, as an implied check, Yang-Baxter.
Report verify_quasitriangular(const PiCoalgebra& a, const RibbonFamily& r);
/// Twist identities: inner action, antipode, comultiplication and equivariance.
Report verify_ribbon(const PiCoalgebra& a, const RibbonFamily& r);
/// Classical ribbon Hopf algebra (H, R, v).
Report verify_ribbon_hopf(const HopfAlgebraData& h, const Vec& R, const Vec& v);

/// Inverse in A_alpha (x) ... for the listed components; nullopt-like empty on failure.
Vec tensor_inverse(const std::vector<const Alg*>& fs, const Vec& x);
Vec algebra_inverse(const Alg& a, const Vec& x);

enum class ApiVariant { Plain, Bar };
/// `action[g]` is the matrix of a Hopf endomorphism of H for each element of `group`.
PiCoalgebra build_A_pi(const HopfAlgebraData& h, const FiniteGroup& group, const std::vector<Vec>& action,
                       ApiVariant variant);

struct GroupLikes {
  FiniteGroup group;
  std::vector<int> basis_index;  // group element -> basis vector of H
};
/// Group-like basis vectors (Delta x = x (x) x, eps x = 1), closed under multiplication.
GroupLikes group_likes(const HopfAlgebraData& h);
/// Conjugation by the group-likes, as Hopf endomorphism matrices.
std::vector<Vec> conjugation_action(const HopfAlgebraData& h, const GroupLikes& gl);

struct RibbonPiCoalgebra {
  PiCoalgebra A;
  RibbonFamily family;
};
/// The two constructions from a ribbon Hopf algebra over its group-likes.
RibbonPiCoalgebra build_R_theta_from_ribbon(const HopfAlgebraData& h, const Vec& R, const Vec& v,
                                            ApiVariant variant);

PiCoalgebra mirror_coalgebra(const PiCoalgebra& a);
RibbonFamily mirror_family(const PiCoalgebra& a, const RibbonFamily& r);

/// Drinfeld-type element u_alpha = sum s_{alpha^-1}(r'') r' of R_{alpha, alpha^-1}.
Vec drinfeld_element(const PiCoalgebra& a, const RibbonFamily& r, int alpha);
/// The w-axioms; the trace condition is checked only for right multiplications on the
/// regular module, which the report notes as partial.
Report verify_spherical(const PiCoalgebra& a, const std::vector<Vec>& w);

HopfAlgebraData group_algebra(const FiniteGroup& g);
/// Sweedler's four-dimensional algebra on the basis 1, g, x, gx.
HopfAlgebraData sweedler_h4();
/// One-parameter family of R-matrices on H4; t = 0 is the one induced from Z/2.
Vec sweedler_r_matrix(const mpq_class& t);
/// The R-matrix 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g) on the group algebra of Z/2.
Vec z2_r_matrix();

}  // namespace pitop
