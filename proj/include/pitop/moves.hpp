#pragma once

#include <random>
#include <string>
#include <vector>

#include "pitop/diagram.hpp"

namespace pitop {

/// Local rewrites of sliced diagrams. Each rewrite keeps every arc outside the
/// rewritten window fixed; new cup seeds are determined by that requirement.
enum class MoveKind {
  R2Insert,        // level `index`, strands pos,pos+1: [cross s, cross -s]
  R2Delete,
  R3,              // three crossings starting at event `index`
  Commute,         // swap events index, index+1 with disjoint support
  KinkToCurl,      // variant 0: loop on the right, 1: loop on the left
  CurlToKink,
  ZigzagInsert,    // level `index`, strand pos; variant picks the side
  ZigzagCancel,
  CupSlide,        // [cup@p+1, cross t@p] <-> [cup@p, cross -t@p+1]
  CapSlide,        // [cross t@p, cap@p+1] <-> [cross -t@p+1, cap@p]
  KinkSlide,       // kink passes through a crossing along its strand
  KinkLeg,         // kink moves between the legs of a cup or cap
  KinkPairInsert,  // level `index`, strand pos: [kink s, kink -s]
  KinkPairCancel,
  CouponSlide,     // a strand passes over or under a coupon
};

std::string to_string(MoveKind k);

struct MoveSite {
  MoveKind kind = MoveKind::Commute;
  int index = 0;  // event index, or level index for insertions
  int pos = 0;
  int sign = 1;
  int variant = 0;
  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

std::string to_string(const MoveSite& s);

/// Sites whose local pattern matches. Insertions are listed for every level and position.
std::vector<MoveSite> enumerate_sites(const Diagram& d, const FiniteGroup& g);

/// Applies the move; throws DomainError when the pattern does not match or no
/// labeling of the new window agrees with the old one on its boundary.
Diagram apply_move(const Diagram& d, const ThinCategory& c, const MoveSite& site);

struct RandomMove {
  MoveSite site;
  Diagram result;
};
/// Uniformly chosen applicable site.
RandomMove random_move(const Diagram& d, const ThinCategory& c, std::mt19937_64& rng);

/// Replaces events [begin, end) by `window`. Seeds marked in `free` (event, seed slot)
/// are chosen from `candidates` so that the labeled state above the window is unchanged.
Diagram splice(const Diagram& d, const ThinCategory& c, int begin, int end, std::vector<Event> window,
               const std::vector<std::pair<int, int>>& free, const std::vector<std::vector<Seed>>& candidates);

}  // namespace pitop
