#include "pitop/moves.hpp"

#include <iterator>
#include <map>
#include <optional>

namespace pitop {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R2Insert: return "R2-insert";
    case MoveKind::R2Delete: return "R2-delete";
    case MoveKind::R3: return "R3";
    case MoveKind::Commute: return "commute";
    case MoveKind::KinkToCurl: return "kink-to-curl";
    case MoveKind::CurlToKink: return "curl-to-kink";
    case MoveKind::ZigzagInsert: return "zigzag-insert";
    case MoveKind::ZigzagCancel: return "zigzag-cancel";
    case MoveKind::CupSlide: return "cup-slide";
    case MoveKind::CapSlide: return "cap-slide";
    case MoveKind::KinkSlide: return "kink-slide";
    case MoveKind::KinkLeg: return "kink-leg";
    case MoveKind::KinkPairInsert: return "kink-pair-insert";
    case MoveKind::KinkPairCancel: return "kink-pair-cancel";
    case MoveKind::CouponSlide: return "coupon-slide";
  }
  return "?";
}

std::string to_string(const MoveSite& s) {
  return to_string(s.kind) + "@" + std::to_string(s.index) + ":" + std::to_string(s.pos) + " sign " +
         std::to_string(s.sign) + " variant " + std::to_string(s.variant);
}

namespace {

enum class FreeKind { None, Cup, CouponOrbit };

struct Plan {
  int begin = 0, end = 0;
  std::vector<Event> window;
  std::vector<std::pair<int, int>> free;
  FreeKind free_kind = FreeKind::None;
  std::vector<Seed> old_seeds;
};

bool is(const Diagram& d, int i, EventKind k) {
  return i >= 0 && i < static_cast<int>(d.events.size()) && d.events[i].kind == k;
}

bool is_cross(const Diagram& d, int i, int pos) { return is(d, i, EventKind::Cross) && d.events[i].pos == pos; }

Plan make(int begin, int end, std::vector<Event> window) {
  Plan p;
  p.begin = begin;
  p.end = end;
  p.window = std::move(window);
  return p;
}

Plan with_cup(Plan p, int slot) {
  p.free = {{slot, 0}};
  p.free_kind = FreeKind::Cup;
  return p;
}

// Output range of event i on level i+1 and input range on level i.
bool disjoint(const Event& a, const Event& b) {
  int a_lo = a.pos, a_hi = a.pos + a.arity_out();
  int b_lo = b.pos, b_hi = b.pos + b.arity_in();
  return b_hi <= a_lo || b_lo >= a_hi;
}

std::optional<Plan> rewrite(const Diagram& d, const std::vector<State>& states, const MoveSite& s) {
  const int n = static_cast<int>(d.events.size());
  const int i = s.index;
  auto ev = [&](int k) -> const Event& { return d.events[k]; };
  switch (s.kind) {
    case MoveKind::R2Insert: {
      if (i < 0 || i > n || s.pos < 0 || s.pos + 2 > static_cast<int>(states[i].size())) return std::nullopt;
      return make(i, i, {Event::cross(s.pos, s.sign), Event::cross(s.pos, -s.sign)});
    }
    case MoveKind::R2Delete: {
      if (!is(d, i, EventKind::Cross) || !is_cross(d, i + 1, ev(i).pos) || ev(i + 1).sign != -ev(i).sign)
        return std::nullopt;
      return make(i, i + 2, {});
    }
    case MoveKind::R3: {
      if (!is(d, i, EventKind::Cross) || !is(d, i + 1, EventKind::Cross) || !is(d, i + 2, EventKind::Cross))
        return std::nullopt;
      int p0 = ev(i).pos, p1 = ev(i + 1).pos, p2 = ev(i + 2).pos;
      if (p0 != p2 || (p1 != p0 + 1 && p1 != p0 - 1)) return std::nullopt;
      int a = ev(i).sign, b = ev(i + 1).sign, c = ev(i + 2).sign;
      if (a == c && b == -a) return std::nullopt;
      return make(i, i + 3, {Event::cross(p1, c), Event::cross(p0, b), Event::cross(p1, a)});
    }
    case MoveKind::Commute: {
      if (i < 0 || i + 1 >= n || !disjoint(ev(i), ev(i + 1))) return std::nullopt;
      Event a = ev(i), b = ev(i + 1);
      if (b.pos + b.arity_in() <= a.pos) {
        a.pos += b.arity_out() - b.arity_in();
      } else {
        b.pos += a.arity_in() - a.arity_out();
      }
      return make(i, i + 2, {b, a});
    }
    case MoveKind::KinkToCurl: {
      if (!is(d, i, EventKind::Kink)) return std::nullopt;
      int p = ev(i).pos, k = ev(i).sign, eps = states[i][p].eps;
      if (s.variant == 0) return with_cup(make(i, i + 1, {Event::cup(p + 1, eps), Event::cross(p, k), Event::cap(p + 1, eps)}), 0);
      return with_cup(make(i, i + 1, {Event::cup(p, -eps), Event::cross(p + 1, k), Event::cap(p, -eps)}), 0);
    }
    case MoveKind::CurlToKink: {
      if (!is(d, i, EventKind::Cup) || !is(d, i + 1, EventKind::Cross) || !is(d, i + 2, EventKind::Cap))
        return std::nullopt;
      int q = ev(i).pos, x = ev(i + 1).pos, k = ev(i + 1).sign;
      if (ev(i + 2).pos != q || ev(i + 2).sign != ev(i).sign) return std::nullopt;
      if (x == q - 1 && states[i][x].eps == ev(i).sign) return make(i, i + 3, {Event::kink(x, k)});
      if (x == q + 1 && states[i][q].eps == -ev(i).sign) return make(i, i + 3, {Event::kink(q, k)});
      return std::nullopt;
    }
    case MoveKind::ZigzagInsert: {
      if (i < 0 || i > n || s.pos < 0 || s.pos >= static_cast<int>(states[i].size())) return std::nullopt;
      int p = s.pos, eps = states[i][p].eps;
      if (s.variant == 0) return with_cup(make(i, i, {Event::cup(p + 1, -eps), Event::cap(p, eps)}), 0);
      return with_cup(make(i, i, {Event::cup(p, eps), Event::cap(p + 1, -eps)}), 0);
    }
    case MoveKind::ZigzagCancel: {
      if (!is(d, i, EventKind::Cup) || !is(d, i + 1, EventKind::Cap)) return std::nullopt;
      int q = ev(i).pos, r = ev(i + 1).pos;
      if (ev(i + 1).sign != -ev(i).sign) return std::nullopt;
      if (r == q - 1 || r == q + 1) return make(i, i + 2, {});
      return std::nullopt;
    }
    case MoveKind::CupSlide: {
      if (!is(d, i, EventKind::Cup) || !is(d, i + 1, EventKind::Cross)) return std::nullopt;
      int q = ev(i).pos, x = ev(i + 1).pos, t = ev(i + 1).sign, e = ev(i).sign;
      if (x == q - 1) return with_cup(make(i, i + 2, {Event::cup(q - 1, e), Event::cross(q, -t)}), 0);
      if (x == q + 1) return with_cup(make(i, i + 2, {Event::cup(q + 1, e), Event::cross(q, -t)}), 0);
      return std::nullopt;
    }
    case MoveKind::CapSlide: {
      if (!is(d, i, EventKind::Cross) || !is(d, i + 1, EventKind::Cap)) return std::nullopt;
      int x = ev(i).pos, q = ev(i + 1).pos, t = ev(i).sign, e = ev(i + 1).sign;
      if (q == x + 1) return make(i, i + 2, {Event::cross(x + 1, -t), Event::cap(x, e)});
      if (q == x - 1) return make(i, i + 2, {Event::cross(x - 1, -t), Event::cap(x, e)});
      return std::nullopt;
    }
    case MoveKind::KinkSlide: {
      if (is(d, i, EventKind::Kink) && is(d, i + 1, EventKind::Cross)) {
        int p = ev(i).pos, x = ev(i + 1).pos;
        if (x == p) return make(i, i + 2, {ev(i + 1), Event::kink(p + 1, ev(i).sign)});
        if (x == p - 1) return make(i, i + 2, {ev(i + 1), Event::kink(p - 1, ev(i).sign)});
      }
      if (is(d, i, EventKind::Cross) && is(d, i + 1, EventKind::Kink)) {
        int x = ev(i).pos, p = ev(i + 1).pos;
        if (p == x + 1) return make(i, i + 2, {Event::kink(x, ev(i + 1).sign), ev(i)});
        if (p == x) return make(i, i + 2, {Event::kink(x + 1, ev(i + 1).sign), ev(i)});
      }
      return std::nullopt;
    }
    case MoveKind::KinkLeg: {
      if (is(d, i, EventKind::Cup) && is(d, i + 1, EventKind::Kink)) {
        int q = ev(i).pos, p = ev(i + 1).pos;
        if (p != q && p != q + 1) return std::nullopt;
        Event k = ev(i + 1);
        k.pos = p == q ? q + 1 : q;
        return make(i + 1, i + 2, {k});
      }
      if (is(d, i, EventKind::Kink) && is(d, i + 1, EventKind::Cap)) {
        int p = ev(i).pos, q = ev(i + 1).pos;
        if (p != q && p != q + 1) return std::nullopt;
        Event k = ev(i);
        k.pos = p == q ? q + 1 : q;
        return make(i, i + 1, {k});
      }
      return std::nullopt;
    }
    case MoveKind::KinkPairInsert: {
      if (i < 0 || i > n || s.pos < 0 || s.pos >= static_cast<int>(states[i].size())) return std::nullopt;
      return make(i, i, {Event::kink(s.pos, s.sign), Event::kink(s.pos, -s.sign)});
    }
    case MoveKind::KinkPairCancel: {
      if (!is(d, i, EventKind::Kink) || !is(d, i + 1, EventKind::Kink)) return std::nullopt;
      if (ev(i).pos != ev(i + 1).pos || ev(i).sign != -ev(i + 1).sign) return std::nullopt;
      return make(i, i + 2, {});
    }
    case MoveKind::CouponSlide: {
      // variant 0: coupon first then the strand crosses its outputs; 1: strand crosses
      // the inputs first. The strand sits on the left of the coupon before the move
      // when s.sign > 0 and on the right otherwise.
      Plan plan;
      if (s.variant == 0) {
        if (!is(d, i, EventKind::Coupon)) return std::nullopt;
        const Event& cp = ev(i);
        int m = cp.in, outs = cp.arity_out();
        bool left = s.sign > 0;
        int p = left ? cp.pos - 1 : cp.pos;
        if (p < 0 || (!left && cp.pos + m >= static_cast<int>(states[i].size()))) return std::nullopt;
        int t = 0;
        for (int k = 0; k < outs; ++k) {
          int want = left ? p + k : p + outs - 1 - k;
          if (!is_cross(d, i + 1 + k, want)) return std::nullopt;
          if (k == 0) t = ev(i + 1).sign;
          if (ev(i + 1 + k).sign != t) return std::nullopt;
        }
        if (outs == 0) return std::nullopt;
        std::vector<Event> w;
        for (int k = 0; k < m; ++k) w.push_back(Event::cross(left ? p + k : p + m - 1 - k, t));
        Event moved = cp;
        moved.pos = left ? p : p + 1;
        w.push_back(moved);
        plan = make(i, i + 1 + outs, w);
        plan.free_kind = FreeKind::CouponOrbit;
        for (int k = 0; k < outs; ++k) plan.free.push_back({m, k});
        plan.old_seeds = cp.seeds;
        return plan;
      }
      // variant 1: crossings over the inputs, then the coupon.
      int j = i;
      while (j < n && d.events[j].kind == EventKind::Cross) ++j;
      if (!is(d, j, EventKind::Coupon)) return std::nullopt;
      const Event& cp = ev(j);
      int m = cp.in, outs = cp.arity_out();
      if (j - i != m || m == 0) return std::nullopt;
      bool left = s.sign > 0;  // strand starts on the left of the inputs
      int p = left ? cp.pos : cp.pos - 1;
      if (p < 0) return std::nullopt;
      int t = ev(i).sign;
      for (int k = 0; k < m; ++k) {
        int want = left ? p + k : p + m - 1 - k;
        if (!is_cross(d, i + k, want) || ev(i + k).sign != t) return std::nullopt;
      }
      std::vector<Event> w;
      Event moved = cp;
      moved.pos = left ? p + 1 : p;
      w.push_back(moved);
      for (int k = 0; k < outs; ++k) w.push_back(Event::cross(left ? p + k : p + outs - 1 - k, t));
      plan = make(i, j + 1, w);
      plan.free_kind = FreeKind::CouponOrbit;
      for (int k = 0; k < outs; ++k) plan.free.push_back({0, k});
      plan.old_seeds = cp.seeds;
      return plan;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Seed>> candidates_for(const Plan& plan, const ThinCategory& c) {
  std::vector<std::vector<Seed>> out;
  if (plan.free_kind == FreeKind::Cup) {
    for (int flag = 0; flag < 2; ++flag)
      for (int s = 0; s < c.size(); ++s) out.push_back({Seed{c.grade[s], s, flag == 1}});
  } else if (plan.free_kind == FreeKind::CouponOrbit) {
    for (int gam = 0; gam < c.group.order(); ++gam) {
      std::vector<Seed> v;
      for (const Seed& s : plan.old_seeds) {
        Seed t = s;
        t.color = c.Act(gam, s.color);
        t.label = c.grade[t.color];
        v.push_back(t);
      }
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

Diagram splice(const Diagram& d, const ThinCategory& c, int begin, int end, std::vector<Event> window,
               const std::vector<std::pair<int, int>>& free, const std::vector<std::vector<Seed>>& candidates) {
  Evaluation ev = run_diagram(d, c);
  const State& below = ev.states[begin];
  const State& above = ev.states[end];
  Diagram sub;
  for (const auto& s : below) sub.inputs.push_back(InputStrand{s.eps, Seed{s.label, s.color, s.canonical}});
  auto attempt = [&](const std::vector<Seed>* assign) -> bool {
    if (assign) {
      for (size_t k = 0; k < free.size(); ++k) {
        Event& e = window[free[k].first];
        if (static_cast<int>(e.seeds.size()) <= free[k].second) e.seeds.resize(free[k].second + 1);
        e.seeds[free[k].second] = (*assign)[k];
      }
    }
    sub.events = window;
    try {
      Evaluation w = run_diagram(sub, c);
      return w.report.ok() && w.states.back() == above;
    } catch (const DomainError&) {
      return false;
    }
  };
  bool found = false;
  if (free.empty()) {
    found = attempt(nullptr);
  } else {
    for (const auto& cand : candidates)
      if (attempt(&cand)) {
        found = true;
        break;
      }
  }
  if (!found) throw DomainError("no labeling of the rewritten window matches its boundary");
  Diagram out;
  out.inputs = d.inputs;
  out.events.assign(d.events.begin(), d.events.begin() + begin);
  out.events.insert(out.events.end(), window.begin(), window.end());
  out.events.insert(out.events.end(), d.events.begin() + end, d.events.end());
  return out;
}

std::vector<MoveSite> enumerate_sites(const Diagram& d, const FiniteGroup& g) {
  std::vector<State> states = propagate_labels(d, g);
  std::vector<MoveSite> out;
  auto consider = [&](MoveSite s) {
    if (rewrite(d, states, s)) out.push_back(s);
  };
  const int n = static_cast<int>(d.events.size());
  for (int k = 0; k <= n; ++k) {
    int w = static_cast<int>(states[k].size());
    for (int p = 0; p < w; ++p) {
      for (int sg : {1, -1}) {
        if (p + 1 < w) consider({MoveKind::R2Insert, k, p, sg, 0});
        consider({MoveKind::KinkPairInsert, k, p, sg, 0});
      }
      consider({MoveKind::ZigzagInsert, k, p, 1, 0});
      consider({MoveKind::ZigzagInsert, k, p, 1, 1});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (MoveKind kind : {MoveKind::R2Delete, MoveKind::R3, MoveKind::Commute, MoveKind::CurlToKink,
                          MoveKind::ZigzagCancel, MoveKind::CupSlide, MoveKind::CapSlide, MoveKind::KinkSlide,
                          MoveKind::KinkLeg, MoveKind::KinkPairCancel})
      consider({kind, i, 0, 1, 0});
    consider({MoveKind::KinkToCurl, i, 0, 1, 0});
    consider({MoveKind::KinkToCurl, i, 0, 1, 1});
    for (int v : {0, 1})
      for (int sg : {1, -1}) consider({MoveKind::CouponSlide, i, 0, sg, v});
  }
  return out;
}

Diagram apply_move(const Diagram& d, const ThinCategory& c, const MoveSite& site) {
  std::vector<State> states = propagate_labels(d, c.group);
  std::optional<Plan> plan = rewrite(d, states, site);
  if (!plan) throw DomainError("move pattern does not match: " + to_string(site));
  return splice(d, c, plan->begin, plan->end, plan->window, plan->free, candidates_for(*plan, c));
}

RandomMove random_move(const Diagram& d, const ThinCategory& c, std::mt19937_64& rng) {
  // Kind first, then site, so that the many insertion sites do not swamp the rest.
  std::map<MoveKind, std::vector<MoveSite>> by_kind;
  for (const MoveSite& s : enumerate_sites(d, c.group)) by_kind[s.kind].push_back(s);
  while (!by_kind.empty()) {
    auto it = by_kind.begin();
    std::advance(it, std::uniform_int_distribution<size_t>(0, by_kind.size() - 1)(rng));
    std::vector<MoveSite>& sites = it->second;
    size_t k = std::uniform_int_distribution<size_t>(0, sites.size() - 1)(rng);
    try {
      return RandomMove{sites[k], apply_move(d, c, sites[k])};
    } catch (const DomainError&) {
      sites.erase(sites.begin() + static_cast<long>(k));
      if (sites.empty()) by_kind.erase(it);
    }
  }
  throw DomainError("no applicable move");
}

}  // namespace pitop
