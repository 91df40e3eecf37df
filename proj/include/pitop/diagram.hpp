#pragma once

#include <optional>
#include <vector>

#include "pitop/category.hpp"

namespace pitop {

/// Elementary slice of a Morse-sliced tangle diagram.
///
/// Cross at pos p: strands p and p+1 cross; sign +1 means the bottom-left strand
/// passes over to the top-right, -1 means the bottom-right strand passes over.
/// Kink: a framing curl on strand p with sign +1 or -1.
/// Cup/Cap at p: sign +1 creates (consumes) an upward strand at p and a downward one
/// at p+1; sign -1 the reverse.
/// Coupon at p: consumes `in` strands and emits one strand per entry of out_eps.
enum class EventKind { Cross, Kink, Cup, Cap, Coupon };

/// Arc data: pi-label of the oriented arc and the simple colouring it. A canonical
/// seed belongs to a surgery component; its colour is a representative only.
struct Seed {
  int label = 0;
  int color = 0;
  bool canonical = false;
  friend bool operator==(const Seed&, const Seed&) = default;
};

struct Event {
  EventKind kind = EventKind::Cross;
  int pos = 0;
  int sign = 1;
  int in = 0;                 // coupon inputs
  std::vector<int> out_eps;   // coupon output orientations
  CycloNum scalar{1};         // coupon value
  std::vector<Seed> seeds;    // one for a cup, one per coupon output

  int arity_in() const;
  int arity_out() const;
  static Event cross(int pos, int s0);
  static Event kink(int pos, int sign);
  static Event cup(int pos, int eps, Seed seed = {});
  static Event cap(int pos, int eps);
  static Event coupon(int pos, int in, std::vector<int> out_eps, CycloNum value, std::vector<Seed> seeds = {});
  friend bool operator==(const Event& a, const Event& b);
};

struct InputStrand {
  int eps = 1;
  Seed seed;
  friend bool operator==(const InputStrand&, const InputStrand&) = default;
};

struct Diagram {
  std::vector<InputStrand> inputs;
  std::vector<Event> events;

  bool closed_bottom() const { return inputs.empty(); }
  /// Number of strands after all events; throws on arity errors.
  int output_width() const;
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

struct StrandState {
  int eps = 1;
  int label = 0;
  int color = 0;
  bool canonical = false;
  friend bool operator==(const StrandState&, const StrandState&) = default;
};
using State = std::vector<StrandState>;

/// Object of a strand: the colour, or its dual on a downward strand.
inline int strand_object(const ThinCategory& c, const StrandState& s) { return s.eps > 0 ? s.color : c.dual[s.color]; }

struct Evaluation {
  std::vector<State> states;  // states[k] is the level below event k; back() is the top
  CycloNum value{1};
  Report report{"labeling"};
};

/// Propagates labels and colours through the slices and multiplies the local weights.
/// Problems (arity, grading, arcs disagreeing at caps, coupon grading) go to the report.
Evaluation run_diagram(const Diagram& d, const ThinCategory& c);
/// Label-only propagation; colours are left untouched.
std::vector<State> propagate_labels(const Diagram& d, const FiniteGroup& g);

Report validate_labeling(const Diagram& d, const ThinCategory& c);

/// Scalar value of the colored diagram. Needs a strict category with simple unit
/// and a valid labeling; throws otherwise.
CycloNum evaluate_F(const Diagram& d, const ThinCategory& c);

/// Weight of a single event given the level below it.
CycloNum event_weight(const ThinCategory& c, const Event& e, const State& below);

struct ComponentInfo {
  bool circle = true;
  bool canonical = false;
  std::vector<int> cups;         // event indices of cups on the component, in event order
  std::vector<int> cup_delta;    // transport element from the base cup to each cup
  int base_cup = -1;             // event index
  int longitude = 0;             // group element; meaningful for circles
  int framing = 0;               // writhe: self-crossing signs plus kinks
  std::vector<int> segments;
};

struct Tracing {
  std::vector<ComponentInfo> components;
  std::vector<std::vector<int>> level_segments;  // per level, segment id of each strand
  std::vector<int> segment_component;
  std::vector<int> segment_eps;
  std::vector<int> cup_component;                // per event, component of a cup (or -1)
  std::vector<std::vector<int>> linking2;        // twice the linking numbers; framing*2 on the diagonal
};

Tracing trace_components(const Diagram& d, const FiniteGroup& g);

/// Crossing sign (writhe convention) for a crossing event over the given level.
int crossing_sign(const Event& e, const State& below);

/// Closes a one-input one-output diagram on the right and evaluates it.
CycloNum closure_trace(const Diagram& d, const ThinCategory& c);
Diagram closure(const Diagram& d);

/// Reverses the orientation of a circle component, replacing labels by inverses and
/// colours by duals.
Diagram transform_reverse_dual(const Diagram& d, const ThinCategory& c, int component);
/// Replaces a circle component coloured U = U1 (x) U2 at its base cup by two parallel
/// copies coloured by the factors.
Diagram transform_double(const Diagram& d, const ThinCategory& c, int component, int u1, int u2);
/// Conjugates every label by delta and acts on every colour.
Diagram conjugate_diagram(const Diagram& d, const ThinCategory& c, int delta);

/// Disjoint union, placing b to the right of a (both closed at the bottom).
Diagram juxtapose(const Diagram& a, const Diagram& b);

}  // namespace pitop
