#include "pitop/surgery.hpp"

#include <cstdlib>

#include "pitop/moves.hpp"

namespace pitop {

namespace {

bool is_surgery(const ComponentInfo& ci) { return ci.canonical; }

}  // namespace

Report check_special(const SurgeryPresentation& p, const FiniteGroup& g) {
  Report r("special link");
  Tracing t = trace_components(p.diagram, g);
  for (size_t k = 0; k < t.components.size(); ++k) {
    const ComponentInfo& ci = t.components[k];
    if (!is_surgery(ci)) continue;
    std::string w = "component " + std::to_string(k);
    r.record("surgery components are closed", ci.circle, w);
    if (ci.circle)
      r.record("longitude maps to the unit", ci.longitude == g.unit(),
               w + " longitude " + std::to_string(ci.longitude));
  }
  r.check("surgery components are closed");
  r.check("longitude maps to the unit");
  return r;
}

LinkingData signature_of_linking(const SurgeryPresentation& p, const FiniteGroup& g) {
  Tracing t = trace_components(p.diagram, g);
  LinkingData out;
  for (size_t k = 0; k < t.components.size(); ++k)
    if (is_surgery(t.components[k])) out.components.push_back(static_cast<int>(k));
  size_t n = out.components.size();
  out.matrix.assign(n, std::vector<mpq_class>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      out.matrix[i][j] = mpq_class(t.linking2[out.components[i]][out.components[j]], 2);
      out.matrix[i][j].canonicalize();
    }
  out.inertia = inertia(out.matrix);
  return out;
}

CycloNum evaluate_canonical(const SurgeryPresentation& p, const ThinCategory& c) {
  const FiniteGroup& g = c.group;
  Tracing t = trace_components(p.diagram, g);
  struct Slot {
    int component;
    std::vector<int> simples;
  };
  std::vector<Slot> slots;
  for (size_t k = 0; k < t.components.size(); ++k) {
    const ComponentInfo& ci = t.components[k];
    if (!is_surgery(ci)) continue;
    if (!ci.circle) throw DomainError("canonical coloring needs closed surgery components");
    int label = p.diagram.events[ci.base_cup].seeds[0].label;
    slots.push_back({static_cast<int>(k), c.component(label)});
  }
  std::vector<CycloNum> dims(c.size());
  for (int s = 0; s < c.size(); ++s) dims[s] = categorical_dim(c, s);
  CycloNum total(0);
  std::vector<size_t> choice(slots.size(), 0);
  for (const auto& s : slots)
    if (s.simples.empty()) return total;
  while (true) {
    Diagram d = p.diagram;
    CycloNum weight(1);
    for (size_t k = 0; k < slots.size(); ++k) {
      const ComponentInfo& ci = t.components[slots[k].component];
      int col = slots[k].simples[choice[k]];
      weight *= dims[col];
      for (size_t j = 0; j < ci.cups.size(); ++j) {
        Seed& s = d.events[ci.cups[j]].seeds[0];
        s.color = c.Act(ci.cup_delta[j], col);
        s.label = c.grade[s.color];
      }
    }
    total += weight * evaluate_F(d, c);
    size_t k = 0;
    while (k < slots.size() && ++choice[k] == slots[k].simples.size()) choice[k++] = 0;
    if (k == slots.size()) break;
  }
  return total;
}

TauResult tau(const SurgeryPresentation& p, const ThinCategory& c, const ModularData& md) {
  Report sp = check_special(p, c.group);
  if (!sp.ok()) throw DomainError("presentation is not special:\n" + sp.str());
  LinkingData L = signature_of_linking(p, c.group);
  TauResult r;
  r.category = c.name;
  r.components = static_cast<int>(L.components.size());
  r.sigma = L.signature();
  r.sigma_plus = L.inertia.positive;
  r.sigma_minus = L.inertia.negative;
  r.b1 = L.b1();
  r.D = md.D;
  r.delta_minus = md.delta_minus;
  r.F = evaluate_canonical(p, c);
  r.value = md.delta_minus.pow(r.sigma) * md.D.pow(-r.sigma - r.components - 1) * r.F;
  r.tau_prime = md.D.pow(r.b1 + 1) * r.value;
  return r;
}

TauResult tau(const SurgeryPresentation& p, const ThinCategory& c, int dsign) {
  return tau(p, c, modular_data(c, dsign));
}

SurgeryPresentation kirby_stabilize(const SurgeryPresentation& p, const ThinCategory& c, int sign, int level,
                                    int pos) {
  if (sign != 1 && sign != -1) throw DomainError("stabilization sign must be +1 or -1");
  std::vector<State> states = propagate_labels(p.diagram, c.group);
  if (level < 0) level = static_cast<int>(p.diagram.events.size());
  if (level > static_cast<int>(p.diagram.events.size())) throw DomainError("stabilization level out of range");
  int w = static_cast<int>(states[level].size());
  if (pos < 0) pos = w;
  if (pos > w) throw DomainError("stabilization position out of range");
  int u = c.unit();
  Seed seed{c.grade[u], u, true};
  SurgeryPresentation out = p;
  std::vector<Event> add{Event::cup(pos, 1, seed), Event::kink(pos, sign), Event::cap(pos, 1)};
  out.diagram.events.insert(out.diagram.events.begin() + level, add.begin(), add.end());
  return out;
}

SurgeryPresentation fenn_rourke(const SurgeryPresentation& p, const ThinCategory& c, const FennRourkeSite& site,
                                int direction) {
  if (direction != 1 && direction != -1) throw DomainError("Fenn-Rourke direction must be +1 or -1");
  std::vector<State> states = propagate_labels(p.diagram, c.group);
  int n = static_cast<int>(p.diagram.events.size());
  if (site.level < 0 || site.level > n) throw DomainError("Fenn-Rourke level out of range");
  int w = site.width, q = site.pos;
  if (w < 0 || q < 0 || q + w > static_cast<int>(states[site.level].size()))
    throw DomainError("Fenn-Rourke site does not fit the level");
  // The circle's right leg runs across the strands and back; for the negative move it
  // passes over first, and the strands receive a left-handed full twist.
  int pass = direction < 0 ? 1 : -1;
  std::vector<Event> win;
  win.push_back(Event::cup(q, 1));
  for (int k = 0; k < w; ++k) win.push_back(Event::cross(q + 1 + k, pass));
  for (int r = 0; r < w; ++r)
    for (int j = 0; j + 1 < w; ++j) win.push_back(Event::cross(q + 1 + j, direction));
  for (int k = 0; k < w; ++k) win.push_back(Event::kink(q + 1 + k, direction));
  for (int k = w - 1; k >= 0; --k) win.push_back(Event::cross(q + 1 + k, pass));
  win.push_back(Event::kink(q, direction));
  win.push_back(Event::cap(q, 1));
  // Boundary agreement alone leaves the label free when it commutes with the strands;
  // the surgery relation on the new circle pins it down.
  bool was_special = check_special(p, c.group).ok();
  SurgeryPresentation out = p;
  for (int s = 0; s < c.size(); ++s) {
    try {
      out.diagram = splice(p.diagram, c, site.level, site.level, win, {{0, 0}}, {{Seed{c.grade[s], s, true}}});
    } catch (const DomainError&) {
      continue;
    }
    if (!was_special || check_special(out, c.group).ok()) return out;
  }
  throw DomainError("no label on the Fenn-Rourke circle keeps the labeling special");
}

SurgeryPresentation connected_sum(const SurgeryPresentation& a, const SurgeryPresentation& b) {
  SurgeryPresentation out;
  out.name = a.name + "#" + b.name;
  out.diagram = juxtapose(a.diagram, b.diagram);
  return out;
}

SurgeryPresentation builtin_presentation(const std::string& name, const ThinCategory& c, int alpha, int p) {
  const FiniteGroup& g = c.group;
  SurgeryPresentation out;
  out.name = name;
  if (name == "S3") return out;
  if (alpha < 0 || alpha >= g.order()) throw DomainError("label out of range");
  std::vector<int> comp = c.component(alpha);
  if (comp.empty()) throw DomainError("no simple object over the label");
  Seed seed{alpha, comp[0], true};
  if (name == "S1xS2") {
    out.name = "S1xS2(" + std::to_string(alpha) + ")";
    out.diagram.events = {Event::cup(0, 1, seed), Event::cap(0, 1)};
    return out;
  }
  if (name == "lens") {
    if (g.pow(alpha, p) != g.unit())
      throw DomainError("lens presentation with framing " + std::to_string(p) + " is not special for label " +
                        std::to_string(alpha));
    out.name = "lens(" + std::to_string(p) + "," + std::to_string(alpha) + ")";
    out.diagram.events.push_back(Event::cup(0, 1, seed));
    for (int k = 0; k < std::abs(p); ++k) out.diagram.events.push_back(Event::kink(0, p > 0 ? 1 : -1));
    out.diagram.events.push_back(Event::cap(0, 1));
    return out;
  }
  throw DomainError("unknown built-in manifold " + name);
}

KirbyRun kirby_random(const SurgeryPresentation& p, const ThinCategory& c, const ModularData& md, int moves,
                      std::mt19937_64& rng) {
  KirbyRun run;
  SurgeryPresentation cur = p;
  CycloNum tau0 = tau(cur, c, md).value;
  CycloNum delta_plus = md.D2 / md.delta_minus;
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int m = 0; m < moves; ++m) {
    std::vector<State> states = propagate_labels(cur.diagram, c.group);
    int n = static_cast<int>(cur.diagram.events.size());
    int kind = uni(0, 3);
    if (kind == 3 && n == 0) kind = 0;  // the empty diagram has no Reidemeister sites
    KirbyStep step;
    if (kind == 2) {
      std::vector<int> levels;
      for (int k = 0; k <= n; ++k)
        if (!states[k].empty()) levels.push_back(k);
      if (levels.empty()) kind = 0;
      else {
        int level = levels[uni(0, static_cast<int>(levels.size()) - 1)];
        int width_avail = static_cast<int>(states[level].size());
        int w = uni(1, std::min(3, width_avail));
        int pos = uni(0, width_avail - w);
        int dir = uni(0, 1) ? 1 : -1;
        CycloNum before = evaluate_canonical(cur, c);
        cur = fenn_rourke(cur, c, FennRourkeSite{level, pos, w}, dir);
        CycloNum after = evaluate_canonical(cur, c);
        step.move = "fenn-rourke" + std::string(dir > 0 ? "+" : "-") + " width " + std::to_string(w);
        step.local_identity = after == (dir < 0 ? md.delta_minus : delta_plus) * before;
        run.report.record("Fenn-Rourke local identity", step.local_identity, step.move);
      }
    }
    if (kind == 3) {
      RandomMove mv = random_move(cur.diagram, c, rng);
      cur.diagram = mv.result;
      step.move = to_string(mv.site);
    }
    if (kind == 0 || kind == 1) {
      int level = uni(0, n);
      int pos = uni(0, static_cast<int>(states[level].size()));
      int sign = kind == 0 ? 1 : -1;
      cur = kirby_stabilize(cur, c, sign, level, pos);
      step.move = std::string("stabilize") + (sign > 0 ? "+" : "-");
    }
    step.tau = tau(cur, c, md).value;
    run.report.record("tau unchanged", step.tau == tau0, step.move);
    run.steps.push_back(step);
  }
  run.final = cur;
  return run;
}

}  // namespace pitop
