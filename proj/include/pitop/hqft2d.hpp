#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "pitop/category.hpp"

namespace pitop {

using SparseVec = std::map<int, CycloNum>;

/// Graded algebra on a finite basis with a pairing and a group action, stored as
/// explicit structure tables so that corrupted copies can be verified too.
struct CrossedAlgebra {
  FiniteGroup group;
  std::vector<int> grade;
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> mul;  // mul[i][j] = e_i e_j
  SparseVec unit;
  std::vector<std::vector<CycloNum>> eta;
  std::vector<std::vector<SparseVec>> phi;  // phi[alpha][i] = phi_alpha(e_i)

  int dim() const { return static_cast<int>(grade.size()); }
  std::vector<int> component(int alpha) const;
  SparseVec basis(int i) const { return {{i, CycloNum(1)}}; }
  SparseVec product(const SparseVec& a, const SparseVec& b) const;
  SparseVec act(int alpha, const SparseVec& a) const;
  CycloNum pair(const SparseVec& a, const SparseVec& b) const;
};

/// Classes of simples with the pairing <s>,<t> -> [t = s*] and the category action.
CrossedAlgebra crossed_algebra(const ThinCategory& c);

/// Grading, associativity, unit, pairing (vanishing, nondegeneracy, invariance,
/// symmetry), action by grading-compatible automorphisms preserving the pairing,
/// crossed commutativity and the trace identity.
Report verify_crossed_algebra(const CrossedAlgebra& a);

enum class MutationTarget { Pairing, Action, Multiplication };
std::string to_string(MutationTarget t);
struct Mutation {
  MutationTarget target;
  std::string where;
};
/// Adds 1 to one randomly chosen table entry.
Mutation mutate(CrossedAlgebra& a, std::mt19937_64& rng);

struct Mark {
  int eps = 1;
  int mu = 0;
  int color = 0;
};
struct SurfaceSpec {
  std::vector<Mark> marks;
  std::vector<int> alphas;
  std::vector<int> betas;
  int genus() const { return static_cast<int>(alphas.size()); }
};

/// Product of the mark labels with the commutators [alpha_s, beta_s].
int surface_relation(const FiniteGroup& g, const SurfaceSpec& s);
/// Dimension of the block space as a count of index tuples; no relation check.
long block_count(const ThinCategory& c, const SurfaceSpec& s);
/// Same, throwing DomainError when the surface relation fails.
long block_dimension(const ThinCategory& c, const SurfaceSpec& s);
long closed_surface_value(const ThinCategory& c, const std::vector<int>& alphas, const std::vector<int>& betas);

/// Number of simples over alpha fixed by the action of beta.
long torus_fixed_points(const ThinCategory& c, int alpha, int beta);
/// The three counts for a torus with one mark obtained from different generator systems.
std::vector<long> torus_mark_counts(const ThinCategory& c, int eps, int color, int alpha, int beta);

/// Splitting of Hom(1, V (x) W) along the simples over alpha, for simples V over alpha
/// and W over alpha^-1.
Report verify_splitting(const ThinCategory& c, int alpha);

}  // namespace pitop
