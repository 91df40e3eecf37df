#include "pitop/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pitop {

int Event::arity_in() const {
  switch (kind) {
    case EventKind::Cross: return 2;
    case EventKind::Kink: return 1;
    case EventKind::Cup: return 0;
    case EventKind::Cap: return 2;
    case EventKind::Coupon: return in;
  }
  return 0;
}

int Event::arity_out() const {
  switch (kind) {
    case EventKind::Cross: return 2;
    case EventKind::Kink: return 1;
    case EventKind::Cup: return 2;
    case EventKind::Cap: return 0;
    case EventKind::Coupon: return static_cast<int>(out_eps.size());
  }
  return 0;
}

Event Event::cross(int pos, int s0) {
  Event e;
  e.kind = EventKind::Cross;
  e.pos = pos;
  e.sign = s0;
  return e;
}

Event Event::kink(int pos, int sign) {
  Event e;
  e.kind = EventKind::Kink;
  e.pos = pos;
  e.sign = sign;
  return e;
}

Event Event::cup(int pos, int eps, Seed seed) {
  Event e;
  e.kind = EventKind::Cup;
  e.pos = pos;
  e.sign = eps;
  e.seeds = {seed};
  return e;
}

Event Event::cap(int pos, int eps) {
  Event e;
  e.kind = EventKind::Cap;
  e.pos = pos;
  e.sign = eps;
  return e;
}

Event Event::coupon(int pos, int in, std::vector<int> out_eps, CycloNum value, std::vector<Seed> seeds) {
  Event e;
  e.kind = EventKind::Coupon;
  e.pos = pos;
  e.in = in;
  e.out_eps = std::move(out_eps);
  e.scalar = std::move(value);
  e.seeds = std::move(seeds);
  e.seeds.resize(e.out_eps.size());
  return e;
}

bool operator==(const Event& a, const Event& b) {
  return a.kind == b.kind && a.pos == b.pos && a.sign == b.sign && a.in == b.in && a.out_eps == b.out_eps &&
         a.scalar == b.scalar && a.seeds == b.seeds;
}

int Diagram::output_width() const {
  int w = static_cast<int>(inputs.size());
  for (size_t k = 0; k < events.size(); ++k) {
    const Event& e = events[k];
    if (e.pos < 0 || e.pos + e.arity_in() > w)
      throw DomainError("event " + std::to_string(k) + " at position " + std::to_string(e.pos) +
                        " does not fit a level of width " + std::to_string(w));
    w += e.arity_out() - e.arity_in();
  }
  return w;
}

namespace {

int grade_of(const FiniteGroup& g, const StrandState& s) { return s.eps > 0 ? s.label : g.inv(s.label); }

StrandState from_seed(int eps, const Seed& seed) { return StrandState{eps, seed.label, seed.color, seed.canonical}; }

// Applies one event to a level; colours are updated only when c is given.
State step(const FiniteGroup& g, const ThinCategory* c, const Event& e, const State& below) {
  State out;
  int p = e.pos;
  out.insert(out.end(), below.begin(), below.begin() + p);
  switch (e.kind) {
    case EventKind::Cross: {
      StrandState L = below[p], R = below[p + 1];
      if (e.sign > 0) {
        int h = grade_of(g, L);
        R.label = g.conj(h, R.label);
        if (c) R.color = c->Act(h, R.color);
        out.push_back(R);
        out.push_back(L);
      } else {
        int h = g.inv(grade_of(g, R));
        L.label = g.conj(h, L.label);
        if (c) L.color = c->Act(h, L.color);
        out.push_back(R);
        out.push_back(L);
      }
      break;
    }
    case EventKind::Kink:
      out.push_back(below[p]);
      break;
    case EventKind::Cup: {
      const Seed& s = e.seeds.at(0);
      out.push_back(from_seed(e.sign, s));
      out.push_back(from_seed(-e.sign, s));
      break;
    }
    case EventKind::Cap:
      break;
    case EventKind::Coupon:
      for (size_t k = 0; k < e.out_eps.size(); ++k) out.push_back(from_seed(e.out_eps[k], e.seeds.at(k)));
      break;
  }
  out.insert(out.end(), below.begin() + p + e.arity_in(), below.end());
  return out;
}

int tensor_all(const ThinCategory& c, const std::vector<int>& objs) {
  if (objs.empty()) return c.unit();
  int t = objs[0];
  for (size_t k = 1; k < objs.size() && t >= 0; ++k) t = c.Tensor(t, objs[k]);
  return t;
}

}  // namespace

CycloNum event_weight(const ThinCategory& c, const Event& e, const State& below) {
  int p = e.pos;
  switch (e.kind) {
    case EventKind::Cross: {
      int xl = strand_object(c, below[p]);
      int xr = strand_object(c, below[p + 1]);
      if (e.sign > 0) return c.Braid(xl, xr);
      int h = c.group.inv(c.grade[xr]);
      int y = c.Act(h, xl);
      return c.Braid(xr, y).inv();
    }
    case EventKind::Kink: {
      int x = strand_object(c, below[p]);
      return e.sign > 0 ? c.twist[x] : c.twist[x].inv();
    }
    case EventKind::Cup: {
      int u = e.seeds.at(0).color;
      if (e.sign > 0) return c.bval[u];
      return c.bval[u] / (c.Braid(c.dual[u], u) * c.twist[u]);
    }
    case EventKind::Cap: {
      int u = below[p].color;
      if (e.sign < 0) return c.dval[u];
      return c.twist[u] * c.Braid(u, c.dual[u]) * c.dval[u];
    }
    case EventKind::Coupon: {
      std::vector<int> ins, outs;
      for (int k = 0; k < e.in; ++k) ins.push_back(strand_object(c, below[p + k]));
      for (size_t k = 0; k < e.out_eps.size(); ++k) {
        const Seed& s = e.seeds.at(k);
        outs.push_back(e.out_eps[k] > 0 ? s.color : c.dual[s.color]);
      }
      int a = tensor_all(c, ins), b = tensor_all(c, outs);
      if (a < 0 || a != b) return CycloNum(0);
      return e.scalar;
    }
  }
  return CycloNum(1);
}

Evaluation run_diagram(const Diagram& d, const ThinCategory& c) {
  const FiniteGroup& g = c.group;
  Evaluation ev;
  Report& r = ev.report;
  auto seed_ok = [&](const Seed& s, const std::string& where) {
    bool ok = s.color >= 0 && s.color < c.size() && s.label >= 0 && s.label < g.order();
    r.record("seed indices in range", ok, where);
    if (ok) r.record("arc colour lies over its label", c.grade[s.color] == s.label, where);
    return ok;
  };
  State cur;
  for (size_t i = 0; i < d.inputs.size(); ++i) {
    if (!seed_ok(d.inputs[i].seed, "input " + std::to_string(i))) throw DomainError("bad input seed:\n" + r.str());
    cur.push_back(from_seed(d.inputs[i].eps, d.inputs[i].seed));
  }
  ev.states.push_back(cur);
  for (size_t k = 0; k < d.events.size(); ++k) {
    const Event& e = d.events[k];
    std::string where = "event " + std::to_string(k);
    bool fits = e.pos >= 0 && e.pos + e.arity_in() <= static_cast<int>(cur.size());
    r.record("event fits its level", fits, where);
    if (!fits) throw DomainError("diagram arity mismatch:\n" + r.str());
    for (const Seed& s : e.seeds)
      if (!seed_ok(s, where)) throw DomainError("bad seed:\n" + r.str());
    if (e.kind == EventKind::Cap) {
      const StrandState& a = cur[e.pos];
      const StrandState& b = cur[e.pos + 1];
      bool ok = a.eps == e.sign && b.eps == -e.sign && a.label == b.label && a.color == b.color &&
                a.canonical == b.canonical;
      r.record("arcs agree at caps", ok, where);
    }
    if (e.kind == EventKind::Coupon) {
      int gin = g.unit(), gout = g.unit();
      for (int q = 0; q < e.in; ++q) gin = g.mul(gin, grade_of(g, cur[e.pos + q]));
      for (size_t q = 0; q < e.out_eps.size(); ++q)
        gout = g.mul(gout, e.out_eps[q] > 0 ? e.seeds[q].label : g.inv(e.seeds[q].label));
      r.record("coupon grading", gin == gout, where);
    }
    ev.value *= event_weight(c, e, cur);
    cur = step(g, &c, e, cur);
    ev.states.push_back(cur);
  }
  return ev;
}

std::vector<State> propagate_labels(const Diagram& d, const FiniteGroup& g) {
  std::vector<State> states;
  State cur;
  for (const auto& in : d.inputs) cur.push_back(from_seed(in.eps, in.seed));
  states.push_back(cur);
  for (const Event& e : d.events) {
    if (e.pos < 0 || e.pos + e.arity_in() > static_cast<int>(cur.size()))
      throw DomainError("diagram arity mismatch");
    cur = step(g, nullptr, e, cur);
    states.push_back(cur);
  }
  return states;
}

Report validate_labeling(const Diagram& d, const ThinCategory& c) { return run_diagram(d, c).report; }

CycloNum evaluate_F(const Diagram& d, const ThinCategory& c) {
  if (!c.strict) throw UnsupportedCategory("evaluation needs a strict category");
  c.unit();
  Evaluation ev = run_diagram(d, c);
  if (!ev.report.ok()) throw DomainError("invalid labeling:\n" + ev.report.str());
  return ev.value;
}

int crossing_sign(const Event& e, const State& below) {
  return e.sign * below[e.pos].eps * below[e.pos + 1].eps;
}

Tracing trace_components(const Diagram& d, const FiniteGroup& g) {
  std::vector<State> states = propagate_labels(d, g);
  Tracing t;
  struct Seg {
    int eps;
    int bottom_event = -1, bottom_leg = 0;
    int top_event = -1, top_leg = 0;
    std::vector<int> factors;  // in bottom-to-top order, each already oriented along the strand
  };
  std::vector<Seg> segs;
  std::vector<int> parent;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  auto new_seg = [&](int eps, int ev, int leg) {
    segs.push_back(Seg{eps, ev, leg, -1, 0, {}});
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(segs.size()) - 1;
  };
  std::vector<int> cur;
  for (const auto& in : d.inputs) cur.push_back(new_seg(in.eps, -1, 0));
  t.level_segments.push_back(cur);
  t.cup_component.assign(d.events.size(), -1);
  struct CrossRec {
    int a, b, sign;
  };
  std::vector<CrossRec> crosses;
  std::vector<std::pair<int, int>> kinks;  // segment, sign
  for (size_t k = 0; k < d.events.size(); ++k) {
    const Event& e = d.events[k];
    const State& below = states[k];
    int p = e.pos;
    std::vector<int> next(cur.begin(), cur.begin() + p);
    switch (e.kind) {
      case EventKind::Cross: {
        int sl = cur[p], sr = cur[p + 1];
        const StrandState& L = below[p];
        const StrandState& R = below[p + 1];
        if (e.sign > 0) {
          int h = grade_of(g, L);
          segs[sr].factors.push_back(g.pow(h, e.sign * R.eps));
        } else {
          int h = grade_of(g, R);
          segs[sl].factors.push_back(g.pow(h, e.sign * L.eps));
        }
        crosses.push_back({sl, sr, crossing_sign(e, below)});
        next.push_back(sr);
        next.push_back(sl);
        break;
      }
      case EventKind::Kink: {
        int s = cur[p];
        segs[s].factors.push_back(g.pow(below[p].label, e.sign));
        kinks.push_back({s, e.sign});
        next.push_back(s);
        break;
      }
      case EventKind::Cup: {
        int a = new_seg(e.sign, static_cast<int>(k), 0);
        int b = new_seg(-e.sign, static_cast<int>(k), 1);
        unite(a, b);
        next.push_back(a);
        next.push_back(b);
        break;
      }
      case EventKind::Cap: {
        int a = cur[p], b = cur[p + 1];
        segs[a].top_event = static_cast<int>(k);
        segs[a].top_leg = 0;
        segs[b].top_event = static_cast<int>(k);
        segs[b].top_leg = 1;
        unite(a, b);
        break;
      }
      case EventKind::Coupon: {
        std::vector<int> members;
        for (int q = 0; q < e.in; ++q) {
          segs[cur[p + q]].top_event = static_cast<int>(k);
          segs[cur[p + q]].top_leg = q;
          members.push_back(cur[p + q]);
        }
        for (size_t q = 0; q < e.out_eps.size(); ++q) {
          int s = new_seg(e.out_eps[q], static_cast<int>(k), static_cast<int>(q));
          members.push_back(s);
          next.push_back(s);
        }
        for (size_t q = 1; q < members.size(); ++q) unite(members[0], members[q]);
        break;
      }
    }
    next.insert(next.end(), cur.begin() + p + e.arity_in(), cur.end());
    cur = next;
    t.level_segments.push_back(cur);
  }
  // Components ordered by their smallest segment id.
  int ns = static_cast<int>(segs.size());
  std::vector<int> root_comp(ns, -1);
  t.segment_component.assign(ns, -1);
  t.segment_eps.resize(ns);
  for (int s = 0; s < ns; ++s) {
    int r0 = find(s);
    if (root_comp[r0] < 0) {
      root_comp[r0] = static_cast<int>(t.components.size());
      t.components.emplace_back();
    }
    int ci = root_comp[r0];
    t.segment_component[s] = ci;
    t.segment_eps[s] = segs[s].eps;
    t.components[ci].segments.push_back(s);
  }
  for (auto& ci : t.components)
    for (int s : ci.segments) {
      const Seg& sg = segs[s];
      bool closed_ends = sg.bottom_event >= 0 && d.events[sg.bottom_event].kind == EventKind::Cup &&
                         sg.top_event >= 0 && d.events[sg.top_event].kind == EventKind::Cap;
      if (!closed_ends) ci.circle = false;
    }
  for (size_t k = 0; k < d.events.size(); ++k)
    if (d.events[k].kind == EventKind::Cup) {
      int ci = t.segment_component[t.level_segments[k + 1][d.events[k].pos]];
      t.cup_component[k] = ci;
      t.components[ci].cups.push_back(static_cast<int>(k));
      if (d.events[k].seeds[0].canonical) t.components[ci].canonical = true;
    }
  size_t nc = t.components.size();
  t.linking2.assign(nc, std::vector<int>(nc, 0));
  for (const auto& cr : crosses) {
    int a = t.segment_component[cr.a], b = t.segment_component[cr.b];
    if (a == b) {
      t.components[a].framing += cr.sign;
    } else {
      t.linking2[a][b] += cr.sign;
      t.linking2[b][a] += cr.sign;
    }
  }
  for (auto [s, sign] : kinks) t.components[t.segment_component[s]].framing += sign;
  for (size_t a = 0; a < nc; ++a) t.linking2[a][a] = 2 * t.components[a].framing;
  // Transport around each circle from its base cup along the orientation.
  for (auto& ci : t.components) {
    if (!ci.circle || ci.cups.empty()) continue;
    ci.base_cup = ci.cups[0];
    std::vector<int> delta_of_event(d.events.size(), -1);
    auto plus_leg = [&](int cup_event) {
      const std::vector<int>& lv = t.level_segments[cup_event + 1];
      int p = d.events[cup_event].pos;
      return d.events[cup_event].sign > 0 ? lv[p] : lv[p + 1];
    };
    auto cap_other = [&](int cap_event, int leg) {
      const std::vector<int>& lv = t.level_segments[cap_event];
      int p = d.events[cap_event].pos;
      return leg == 0 ? lv[p + 1] : lv[p];
    };
    auto cup_other = [&](int cup_event, int leg) {
      const std::vector<int>& lv = t.level_segments[cup_event + 1];
      int p = d.events[cup_event].pos;
      return leg == 0 ? lv[p + 1] : lv[p];
    };
    int delta = g.unit();
    int seg = plus_leg(ci.base_cup);
    delta_of_event[ci.base_cup] = g.unit();
    for (size_t guard = 0; guard <= segs.size() * 2; ++guard) {
      const Seg& up = segs[seg];
      for (int f : up.factors) delta = g.mul(f, delta);
      int down = cap_other(up.top_event, up.top_leg);
      const Seg& dn = segs[down];
      for (auto it = dn.factors.rbegin(); it != dn.factors.rend(); ++it) delta = g.mul(*it, delta);
      int cup_event = dn.bottom_event;
      if (cup_event == ci.base_cup) break;
      delta_of_event[cup_event] = delta;
      seg = cup_other(cup_event, dn.bottom_leg);
    }
    ci.longitude = delta;
    for (int cup : ci.cups) ci.cup_delta.push_back(delta_of_event[cup]);
  }
  return t;
}

Diagram closure(const Diagram& d) {
  if (d.inputs.size() != 1 || d.output_width() != 1) throw DomainError("closure needs one input and one output");
  Diagram out;
  int eps = d.inputs[0].eps;
  out.events.push_back(Event::cup(0, eps, d.inputs[0].seed));
  for (const Event& e : d.events) out.events.push_back(e);
  out.events.push_back(Event::cap(0, eps));
  return out;
}

CycloNum closure_trace(const Diagram& d, const ThinCategory& c) {
  State top = propagate_labels(d, c.group).back();
  if (top.size() != 1 || top[0].eps != d.inputs[0].eps || top[0].label != d.inputs[0].seed.label)
    throw DomainError("closure needs matching source and target");
  return evaluate_F(closure(d), c);
}

Diagram transform_reverse_dual(const Diagram& d, const ThinCategory& c, int component) {
  Tracing t = trace_components(d, c.group);
  if (component < 0 || component >= static_cast<int>(t.components.size()) || !t.components[component].circle)
    throw DomainError("orientation reversal needs a circle component");
  Diagram out = d;
  const FiniteGroup& g = c.group;
  for (size_t k = 0; k < d.events.size(); ++k) {
    Event& e = out.events[k];
    int seg = -1;
    if (e.kind == EventKind::Cup) seg = t.level_segments[k + 1][e.pos];
    if (e.kind == EventKind::Cap) seg = t.level_segments[k][e.pos];
    if (seg < 0 || t.segment_component[seg] != component) continue;
    e.sign = -e.sign;
    for (Seed& s : e.seeds) {
      s.label = g.inv(s.label);
      s.color = c.dual[s.color];
    }
  }
  return out;
}

Diagram transform_double(const Diagram& d, const ThinCategory& c, int component, int u1, int u2) {
  const FiniteGroup& g = c.group;
  Tracing t = trace_components(d, g);
  if (component < 0 || component >= static_cast<int>(t.components.size()) || !t.components[component].circle)
    throw DomainError("doubling needs a circle component");
  const ComponentInfo& ci = t.components[component];
  const Seed& base = d.events[ci.base_cup].seeds[0];
  if (c.Tensor(u1, u2) != base.color)
    throw DomainError("factorization does not match the colour of the component");
  std::vector<int> cup_delta(d.events.size(), -1);
  for (size_t j = 0; j < ci.cups.size(); ++j) cup_delta[ci.cups[j]] = ci.cup_delta[j];
  auto seed_for = [&](int delta, int u) {
    Seed s;
    s.color = c.Act(delta, u);
    s.label = c.grade[s.color];
    s.canonical = base.canonical;
    return s;
  };
  Diagram out;
  out.inputs = d.inputs;
  for (size_t k = 0; k < d.events.size(); ++k) {
    const Event& e = d.events[k];
    const std::vector<int>& lv = t.level_segments[k];
    auto on = [&](int q) { return t.segment_component[lv[q]] == component; };
    auto newpos = [&](int q) {
      int np = q;
      for (int r = 0; r < q; ++r) np += on(r) ? 1 : 0;
      return np;
    };
    int b = newpos(e.pos);
    switch (e.kind) {
      case EventKind::Cross: {
        int wl = on(e.pos) ? 2 : 1, wr = on(e.pos + 1) ? 2 : 1;
        for (int i = wl - 1; i >= 0; --i)
          for (int j = 0; j < wr; ++j) out.events.push_back(Event::cross(b + i + j, e.sign));
        break;
      }
      case EventKind::Kink:
        if (!on(e.pos)) {
          out.events.push_back(Event::kink(b, e.sign));
        } else if (e.sign > 0) {
          out.events.push_back(Event::kink(b, 1));
          out.events.push_back(Event::kink(b + 1, 1));
          out.events.push_back(Event::cross(b, 1));
          out.events.push_back(Event::cross(b, 1));
        } else {
          out.events.push_back(Event::cross(b, -1));
          out.events.push_back(Event::cross(b, -1));
          out.events.push_back(Event::kink(b, -1));
          out.events.push_back(Event::kink(b + 1, -1));
        }
        break;
      case EventKind::Cup: {
        if (t.cup_component[k] != component) {
          Event f = e;
          f.pos = b;
          out.events.push_back(f);
          break;
        }
        int delta = cup_delta[k];
        if (e.sign > 0) {
          out.events.push_back(Event::cup(b, 1, seed_for(delta, u1)));
          out.events.push_back(Event::cup(b + 1, 1, seed_for(delta, u2)));
        } else {
          out.events.push_back(Event::cup(b, -1, seed_for(delta, u2)));
          out.events.push_back(Event::cup(b + 1, -1, seed_for(delta, u1)));
        }
        break;
      }
      case EventKind::Cap:
        if (!on(e.pos)) {
          Event f = e;
          f.pos = b;
          out.events.push_back(f);
        } else {
          out.events.push_back(Event::cap(b + 1, e.sign));
          out.events.push_back(Event::cap(b, e.sign));
        }
        break;
      case EventKind::Coupon: {
        for (int q = 0; q < e.in; ++q)
          if (on(e.pos + q)) throw DomainError("doubling a component through a coupon is not supported");
        Event f = e;
        f.pos = b;
        out.events.push_back(f);
        break;
      }
    }
  }
  return out;
}

Diagram conjugate_diagram(const Diagram& d, const ThinCategory& c, int delta) {
  const FiniteGroup& g = c.group;
  Diagram out = d;
  auto fix = [&](Seed& s) {
    s.label = g.conj(delta, s.label);
    s.color = c.Act(delta, s.color);
  };
  for (auto& in : out.inputs) fix(in.seed);
  for (auto& e : out.events)
    for (auto& s : e.seeds) fix(s);
  return out;
}

Diagram juxtapose(const Diagram& a, const Diagram& b) {
  if (!b.inputs.empty()) throw DomainError("juxtaposition needs the right diagram closed at the bottom");
  Diagram out = a;
  int shift = a.output_width();
  for (Event e : b.events) {
    e.pos += shift;
    out.events.push_back(e);
  }
  return out;
}

}  // namespace pitop
