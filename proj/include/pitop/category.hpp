#pragma once

#include <string>
#include <vector>

#include "pitop/cocycles.hpp"
#include "pitop/linalg.hpp"

namespace pitop {

struct UnsupportedCategory : DomainError {
  using DomainError::DomainError;
};
struct NotModular : DomainError {
  using DomainError::DomainError;
};

/// Semisimple crossed pi-category whose Hom spaces between simples are at most
/// one-dimensional and whose tensor products of simples are simple or zero.
///
/// Every structure morphism is a scalar. Simples are indices 0..size()-1.
/// Tables are indexed as act[alpha*S + s], tensor/braid[s*S + t].
struct ThinCategory {
  FiniteGroup group;
  long order = 1;
  std::string name;
  std::vector<std::string> labels;
  std::vector<int> grade;
  std::vector<int> dual;
  std::vector<int> act;
  std::vector<int> tensor;  // -1 for the zero object
  std::vector<int> units;   // the unit object is the sum of these simples
  std::vector<CycloNum> braid;
  std::vector<CycloNum> twist;
  std::vector<CycloNum> bval;
  std::vector<CycloNum> dval;
  bool strict = true;

  int size() const { return static_cast<int>(grade.size()); }
  int Act(int alpha, int s) const { return act[alpha * size() + s]; }
  int Tensor(int s, int t) const { return tensor[s * size() + t]; }
  const CycloNum& Braid(int s, int t) const { return braid[s * size() + t]; }
  /// Simples graded by alpha, in index order.
  std::vector<int> component(int alpha) const;
  bool is_unit(int s) const;
  /// The unit simple; throws UnsupportedCategory when the unit is not simple.
  int unit() const;
  /// Resizes every table for `simples` simples with identity-like defaults.
  void allocate(int simples);

  friend bool operator==(const ThinCategory& a, const ThinCategory& b);
};

/// Crossed-category identities at the level of simples and scalars.
Report validate_structure(const ThinCategory& c);

/// One simple per group element. Refuses tuples that fail verification.
ThinCategory pointlike_category(const RibbonTuple& t);

CycloNum categorical_dim(const ThinCategory& c, int s);

using ColorElement = std::vector<CycloNum>;

/// Verlinde algebra on the free basis of simples.
struct ColorAlgebra {
  ThinCategory cat;
  std::vector<CycloNum> dims;

  int size() const { return cat.size(); }
  ColorElement zero() const { return ColorElement(size(), CycloNum(0)); }
  ColorElement basis(int s) const;
  ColorElement unit() const;
  ColorElement mul(const ColorElement& x, const ColorElement& y) const;
  ColorElement act(int alpha, const ColorElement& x) const;
  ColorElement star(const ColorElement& x) const;
  CycloNum dim(const ColorElement& x) const;
  /// Grade of a homogeneous nonzero element, or -1.
  int grade_of(const ColorElement& x) const;
};

ColorAlgebra verlinde_algebra(const ThinCategory& c);
Report verify_color_algebra(const ColorAlgebra& a);

struct ModularData {
  Matrix S;
  CycloNum D;
  CycloNum D2;
  CycloNum delta_plus;
  CycloNum delta_minus;
  std::vector<int> counts;  // simples per group element
  Report report{"modular data"};
};

/// Throws NotModular when S is singular or the unit is not simple, and
/// DomainError when D^2 has no square root in Q(zeta_N).
ModularData modular_data(const ThinCategory& c, int dsign = +1);

ColorElement canonical_color(const ThinCategory& c, int alpha);
/// Canonical-color identities: conjugation, dual, and the product rule with simples.
Report verify_canonical_colors(const ThinCategory& c);
/// Sum of squared dimensions over the component of alpha.
CycloNum component_weight(const ThinCategory& c, int alpha);

/// Yang-Baxter, twist product rule, action invariance and the dual twist identity
/// on all simple triples.
Report crossed_invariance_suite(const ThinCategory& c);

}  // namespace pitop
