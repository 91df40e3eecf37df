#pragma once

#include <random>
#include <string>
#include <vector>

#include "pitop/diagram.hpp"

namespace pitop {

/// Framed link with pi-labels. Components whose seeds are canonical are the surgery
/// link; the remaining ones form the colored graph carried along (may be empty).
struct SurgeryPresentation {
  std::string name;
  Diagram diagram;
  friend bool operator==(const SurgeryPresentation&, const SurgeryPresentation&) = default;
};

/// Every surgery component is a circle whose longitude maps to the unit.
Report check_special(const SurgeryPresentation& p, const FiniteGroup& g);

struct LinkingData {
  std::vector<int> components;                 // indices into the tracing, surgery link only
  std::vector<std::vector<mpq_class>> matrix;  // framings on the diagonal
  Inertia inertia;
  int b1() const { return inertia.zero; }
  int signature() const { return inertia.signature(); }
};
LinkingData signature_of_linking(const SurgeryPresentation& p, const FiniteGroup& g);

/// F of the diagram with each surgery component colored by the canonical color of
/// its label: a dimension-weighted sum over the simples of that component.
CycloNum evaluate_canonical(const SurgeryPresentation& p, const ThinCategory& c);

struct TauResult {
  CycloNum value;
  CycloNum tau_prime;  // D^(b1+1) * value
  CycloNum F;
  CycloNum D;
  CycloNum delta_minus;
  int sigma = 0;
  int sigma_plus = 0;
  int sigma_minus = 0;
  int b1 = 0;
  int components = 0;
  std::string category;
};
/// Throws DomainError for non-special presentations and NotModular for
/// categories without modular data.
TauResult tau(const SurgeryPresentation& p, const ThinCategory& c, int dsign = +1);
/// Same, reusing precomputed modular data.
TauResult tau(const SurgeryPresentation& p, const ThinCategory& c, const ModularData& md);

/// Adds a distant unknot with framing `sign`, label 1, at level `level` and position `pos`
/// (defaults: the top right).
SurgeryPresentation kirby_stabilize(const SurgeryPresentation& p, const ThinCategory& c, int sign, int level = -1,
                                    int pos = -1);

struct FennRourkeSite {
  int level = 0;
  int pos = 0;
  int width = 1;
  friend bool operator==(const FennRourkeSite&, const FennRourkeSite&) = default;
};
/// Encircles `width` parallel strands by an unknot of framing `direction` and
/// applies the full twist of the opposite handedness to the strands. The circle's
/// label is the one that keeps the labeling outside the ball fixed.
SurgeryPresentation fenn_rourke(const SurgeryPresentation& p, const ThinCategory& c, const FennRourkeSite& site,
                                int direction);

/// Disjoint union of the two presentations.
SurgeryPresentation connected_sum(const SurgeryPresentation& a, const SurgeryPresentation& b);

/// "S3", "S1xS2" (label alpha, framing 0) or "lens" (framing p, label alpha).
SurgeryPresentation builtin_presentation(const std::string& name, const ThinCategory& c, int alpha = 0,
                                         int p = 0);

/// Records the local identity F(T') = Delta F(T) checked at each Fenn-Rourke step.
struct KirbyStep {
  std::string move;
  CycloNum tau;
  bool local_identity = true;
};
struct KirbyRun {
  std::vector<KirbyStep> steps;
  SurgeryPresentation final;
  Report report{"Kirby invariance"};
};
/// Random sequence of stabilizations, Fenn-Rourke moves (width 1-3) and diagram moves.
KirbyRun kirby_random(const SurgeryPresentation& p, const ThinCategory& c, const ModularData& md, int moves,
                      std::mt19937_64& rng);

}  // namespace pitop
