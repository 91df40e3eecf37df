#include "pitop/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <map>
#include <set>
#include <sstream>

namespace pitop {

ThinCategory relabel(const ThinCategory& c, const std::vector<int>& perm) {
  int S = c.size();
  int n = c.group.order();
  ThinCategory r = c;
  for (int s = 0; s < S; ++s) {
    int p = perm[s];
    r.labels[p] = c.labels[s];
    r.grade[p] = c.grade[s];
    r.dual[p] = perm[c.dual[s]];
    r.twist[p] = c.twist[s];
    r.bval[p] = c.bval[s];
    r.dval[p] = c.dval[s];
    for (int a = 0; a < n; ++a) r.act[a * S + p] = perm[c.Act(a, s)];
    for (int t = 0; t < S; ++t) {
      int st = c.Tensor(s, t);
      r.tensor[p * S + perm[t]] = st < 0 ? -1 : perm[st];
      r.braid[p * S + perm[t]] = c.Braid(s, t);
    }
  }
  for (auto& u : r.units) u = perm[u];
  std::sort(r.units.begin(), r.units.end());
  return r;
}

ThinCategory pullback(const ThinCategory& c, const GroupHom& q) {
  if (!q.source()) throw DomainError("pullback needs a homomorphism from a finite group");
  if (!(q.target() == c.group)) throw DomainError("pullback target differs from the category's group");
  const FiniteGroup& src = *q.source();
  std::vector<std::pair<int, int>> simples;
  std::map<std::pair<int, int>, int> index;
  for (int a = 0; a < src.order(); ++a)
    for (int s : c.component(q(a))) {
      index[{a, s}] = static_cast<int>(simples.size());
      simples.push_back({a, s});
    }
  ThinCategory r;
  r.group = src;
  r.order = c.order;
  r.name = "pullback(" + c.name + ")";
  r.strict = c.strict;
  int S = static_cast<int>(simples.size());
  r.allocate(S);
  for (int i = 0; i < S; ++i) {
    auto [a, s] = simples[i];
    r.labels[i] = c.labels[s] + "@" + std::to_string(a);
    r.grade[i] = a;
    r.dual[i] = index.at({src.inv(a), c.dual[s]});
    r.twist[i] = c.twist[s];
    r.bval[i] = c.bval[s];
    r.dval[i] = c.dval[s];
    for (int b = 0; b < src.order(); ++b) r.act[b * S + i] = index.at({src.conj(b, a), c.Act(q(b), s)});
    for (int j = 0; j < S; ++j) {
      auto [b, t] = simples[j];
      int st = c.Tensor(s, t);
      r.tensor[i * S + j] = st < 0 ? -1 : index.at({src.mul(a, b), st});
      r.braid[i * S + j] = c.Braid(s, t);
    }
    if (a == src.unit() && c.is_unit(s)) r.units.push_back(i);
  }
  return r;
}

ThinCategory pushforward(const ThinCategory& c, const GroupHom& q) {
  if (!q.source() || !(*q.source() == c.group)) throw DomainError("pushforward source differs from the category's group");
  const FiniteGroup& src = c.group;
  const FiniteGroup& tgt = q.target();
  std::vector<int> lift(tgt.order(), -1);
  for (int a = 0; a < src.order(); ++a)
    if (lift[q(a)] < 0) lift[q(a)] = a;
  for (int b = 0; b < tgt.order(); ++b)
    if (lift[b] < 0) throw DomainError("pushforward needs a surjection; " + std::to_string(b) + " is not hit");
  for (int k = 0; k < src.order(); ++k) {
    if (q(k) != tgt.unit()) continue;
    for (int s = 0; s < c.size(); ++s)
      if (c.Act(k, s) != s)
        throw DomainError("kernel element " + std::to_string(k) + " moves simple " + c.labels[s]);
  }
  ThinCategory r = c;
  r.group = tgt;
  r.name = "pushforward(" + c.name + ")";
  int S = c.size();
  r.act.assign(static_cast<size_t>(tgt.order()) * S, 0);
  for (int s = 0; s < S; ++s) {
    r.grade[s] = q(c.grade[s]);
    for (int b = 0; b < tgt.order(); ++b) r.act[b * S + s] = c.Act(lift[b], s);
  }
  return r;
}

ProductResult product_categories(const std::vector<ThinCategory>& cs, ProductMode mode) {
  if (cs.empty()) throw DomainError("product of an empty family");
  for (const auto& c : cs)
    if (!(c.group == cs[0].group)) throw DomainError("product factors must share the group");
  const FiniteGroup& g = cs[0].group;
  int n = g.order();
  ProductResult out;
  ThinCategory& r = out.cat;
  r.group = g;
  r.order = 1;
  r.strict = true;
  for (const auto& c : cs) {
    r.order = std::lcm(r.order, c.order);
    r.strict = r.strict && c.strict;
  }
  if (mode == ProductMode::Direct) {
    r.name = "direct product";
    std::vector<int> offset;
    int S = 0;
    for (const auto& c : cs) {
      offset.push_back(S);
      S += c.size();
    }
    r.allocate(S);
    for (size_t f = 0; f < cs.size(); ++f) {
      const ThinCategory& c = cs[f];
      int o = offset[f];
      for (int s = 0; s < c.size(); ++s) {
        int i = o + s;
        r.labels[i] = std::to_string(f) + ":" + c.labels[s];
        r.grade[i] = c.grade[s];
        r.dual[i] = o + c.dual[s];
        r.twist[i] = c.twist[s];
        r.bval[i] = c.bval[s];
        r.dval[i] = c.dval[s];
        for (int a = 0; a < n; ++a) r.act[a * S + i] = o + c.Act(a, s);
        for (int t = 0; t < c.size(); ++t) {
          int st = c.Tensor(s, t);
          r.tensor[i * S + o + t] = st < 0 ? -1 : o + st;
          r.braid[i * S + o + t] = c.Braid(s, t);
        }
      }
      for (int u : c.units) r.units.push_back(o + u);
    }
  } else {
    r.name = "tensor product";
    // Simples are families of simples with a common grade, grade-major.
    std::vector<std::vector<int>> simples;
    std::map<std::vector<int>, int> index;
    for (int a = 0; a < n; ++a) {
      std::vector<std::vector<int>> comps;
      for (const auto& c : cs) comps.push_back(c.component(a));
      std::vector<int> pick(cs.size(), 0);
      bool empty = std::any_of(comps.begin(), comps.end(), [](const auto& v) { return v.empty(); });
      while (!empty) {
        std::vector<int> fam;
        for (size_t f = 0; f < cs.size(); ++f) fam.push_back(comps[f][pick[f]]);
        index[fam] = static_cast<int>(simples.size());
        simples.push_back(fam);
        size_t f = cs.size();
        while (f > 0) {
          --f;
          if (++pick[f] < static_cast<int>(comps[f].size())) break;
          pick[f] = 0;
          if (f == 0) empty = true;
        }
        if (cs.size() == 0) break;
      }
    }
    int S = static_cast<int>(simples.size());
    r.allocate(S);
    auto map_fam = [&](auto fn) {
      std::vector<int> out;
      for (size_t f = 0; f < cs.size(); ++f) {
        int v = fn(f);
        if (v < 0) return -1;
        out.push_back(v);
      }
      return index.at(out);
    };
    for (int i = 0; i < S; ++i) {
      const auto& fam = simples[i];
      r.grade[i] = cs[0].grade[fam[0]];
      std::string lab = "(";
      for (size_t f = 0; f < cs.size(); ++f) {
        lab += (f ? "," : "") + cs[f].labels[fam[f]];
        r.twist[i] *= cs[f].twist[fam[f]];
        r.bval[i] *= cs[f].bval[fam[f]];
        r.dval[i] *= cs[f].dval[fam[f]];
      }
      r.labels[i] = lab + ")";
      r.dual[i] = map_fam([&](size_t f) { return cs[f].dual[fam[f]]; });
      for (int a = 0; a < n; ++a) r.act[a * S + i] = map_fam([&](size_t f) { return cs[f].Act(a, fam[f]); });
      for (int j = 0; j < S; ++j) {
        const auto& fam2 = simples[j];
        r.tensor[i * S + j] = map_fam([&](size_t f) { return cs[f].Tensor(fam[f], fam2[f]); });
        CycloNum b(1);
        for (size_t f = 0; f < cs.size(); ++f) b *= cs[f].Braid(fam[f], fam2[f]);
        r.braid[i * S + j] = b;
      }
      bool unit = true;
      for (size_t f = 0; f < cs.size(); ++f) unit = unit && cs[f].is_unit(fam[f]);
      if (unit) r.units.push_back(i);
    }
  }
  out.unit_rank = static_cast<int>(r.units.size());
  out.report.merge(validate_structure(r));
  if (r.strict) out.report.merge(crossed_invariance_suite(r));
  return out;
}

ThinCategory mirror_category(const ThinCategory& c) {
  if (!c.strict) throw UnsupportedCategory("mirror needs a strict category");
  const FiniteGroup& g = c.group;
  int S = c.size();
  ThinCategory r = c;
  r.name = "mirror(" + c.name + ")";
  for (int s = 0; s < S; ++s) {
    r.grade[s] = g.inv(c.grade[s]);
    r.twist[s] = c.twist[s].inv();
    for (int t = 0; t < S; ++t) {
      // U (x) V in the mirror is phi_{grade_C(V)}(U) (x) V.
      r.tensor[s * S + t] = c.Tensor(c.Act(c.grade[t], s), t);
      const CycloNum& b = c.Braid(t, s);
      r.braid[s * S + t] = b.is_zero() ? CycloNum(1) : b.inv();
    }
  }
  return r;
}

TransferResult transfer(const ThinCategory& c, const FiniteGroup& pi, const std::vector<int>& embedding,
                        const std::vector<int>& reps) {
  const FiniteGroup& G = c.group;
  if (static_cast<int>(embedding.size()) != G.order()) throw DomainError("embedding table has wrong length");
  std::vector<int> back(pi.order(), -1);
  for (int x = 0; x < G.order(); ++x) {
    int y = embedding[x];
    if (y < 0 || y >= pi.order() || back[y] >= 0) throw DomainError("embedding is not injective");
    back[y] = x;
    for (int z = 0; z < G.order(); ++z)
      if (embedding[G.mul(x, z)] != pi.mul(y, embedding[z])) throw DomainError("embedding is not a homomorphism");
  }
  std::vector<bool> in_sub(pi.order());
  for (int y = 0; y < pi.order(); ++y) in_sub[y] = back[y] >= 0;
  TransferResult out;
  out.cosets = right_cosets(pi, in_sub, reps);
  const auto& w = out.cosets.reps;
  int k = static_cast<int>(w.size());
  auto conj_into_G = [&](int i, int alpha) { return back[pi.conj(w[i], alpha)]; };
  // Simple (alpha, i, s): i in N(alpha), s a simple of C over w_i alpha w_i^-1.
  std::vector<std::array<int, 3>> simples;
  std::map<std::array<int, 3>, int> index;
  for (int a = 0; a < pi.order(); ++a)
    for (int i = 0; i < k; ++i) {
      int ga = conj_into_G(i, a);
      if (ga < 0) continue;
      for (int s : c.component(ga)) {
        index[{a, i, s}] = static_cast<int>(simples.size());
        simples.push_back({a, i, s});
      }
    }
  ThinCategory& r = out.cat;
  r.group = pi;
  r.order = c.order;
  r.strict = c.strict;
  r.name = "transfer(" + c.name + ")";
  int S = static_cast<int>(simples.size());
  r.allocate(S);
  auto moved = [&](int gam, int i) { return out.cosets.coset_of[pi.mul(w[i], pi.inv(gam))]; };
  for (int x = 0; x < S; ++x) {
    auto [a, i, s] = simples[x];
    r.labels[x] = c.labels[s] + "[" + std::to_string(a) + "|" + std::to_string(i) + "]";
    r.grade[x] = a;
    r.dual[x] = index.at({pi.inv(a), i, c.dual[s]});
    r.twist[x] = c.twist[s];
    r.bval[x] = c.bval[s];
    r.dval[x] = c.dval[s];
    out.coset_of_simple.push_back(i);
    for (int gam = 0; gam < pi.order(); ++gam) {
      int j = moved(gam, i);
      int gi = back[pi.mul(pi.mul(w[j], gam), pi.inv(w[i]))];
      if (gi < 0) throw DomainError("coset bookkeeping failed");
      r.act[gam * S + x] = index.at({pi.conj(gam, a), j, c.Act(gi, s)});
    }
    for (int y = 0; y < S; ++y) {
      auto [b, j, t] = simples[y];
      if (i != j) {
        r.tensor[x * S + y] = -1;
        continue;
      }
      int st = c.Tensor(s, t);
      r.tensor[x * S + y] = st < 0 ? -1 : index.at({pi.mul(a, b), i, st});
      r.braid[x * S + y] = c.Braid(s, t);
    }
    if (a == pi.unit() && c.is_unit(s)) r.units.push_back(x);
  }
  out.unit_rank = static_cast<int>(r.units.size());
  Report& rep = out.report;
  rep.merge(validate_structure(r));
  if (r.strict) rep.merge(crossed_invariance_suite(r));
  // Objects with support of size at most two, built from pairs of simples in one component.
  auto support = [&](const std::vector<int>& obj) {
    std::set<int> sup;
    for (int x : obj) sup.insert(out.coset_of_simple[x]);
    return sup;
  };
  std::vector<std::vector<int>> objects;
  for (int x = 0; x < S; ++x) {
    objects.push_back({x});
    for (int y = x + 1; y < S; ++y)
      if (r.grade[x] == r.grade[y] && out.coset_of_simple[x] != out.coset_of_simple[y]) objects.push_back({x, y});
  }
  for (const auto& U : objects) {
    std::vector<int> du;
    for (int x : U) du.push_back(r.dual[x]);
    rep.record("support of a dual", support(du) == support(U));
    for (int gam = 0; gam < pi.order(); ++gam) {
      std::vector<int> gu;
      std::set<int> moved_sup;
      for (int x : U) {
        gu.push_back(r.Act(gam, x));
        moved_sup.insert(moved(gam, out.coset_of_simple[x]));
      }
      rep.record("support moves with the action", support(gu) == moved_sup);
    }
  }
  bool full_tensor = std::none_of(c.tensor.begin(), c.tensor.end(), [](int t) { return t < 0; });
  for (size_t p = 0; p < objects.size() && p < 64; ++p)
    for (size_t q = 0; q < objects.size() && q < 64; ++q) {
      std::vector<int> uv;
      for (int x : objects[p])
        for (int y : objects[q])
          if (r.Tensor(x, y) >= 0) uv.push_back(r.Tensor(x, y));
      std::set<int> a = support(objects[p]), b = support(objects[q]), both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(both, both.begin()));
      if (full_tensor) rep.record("support of a tensor product", support(uv) == both);
    }
  rep.record("unit rank equals the index", out.unit_rank == k * static_cast<int>(c.units.size()));
  return out;
}

bool is_pointlike(const ThinCategory& c) {
  if (c.units.size() != 1 || c.size() != c.group.order()) return false;
  for (int a = 0; a < c.group.order(); ++a)
    if (c.component(a).size() != 1) return false;
  return true;
}

CharacterGroup aut0_pointlike(const ThinCategory& c) {
  if (!c.group.is_abelian()) throw UnsupportedCategory("character group needs an abelian grading group");
  if (!is_pointlike(c)) throw UnsupportedCategory("character group is only implemented for pointlike categories");
  CharacterGroup out;
  out.order = c.order;
  out.chars = characters(c.group, c.order);
  int m = static_cast<int>(out.chars.size());
  std::map<std::vector<long>, int> index;
  for (int i = 0; i < m; ++i) index[out.chars[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<long> prod(c.group.order());
      for (int x = 0; x < c.group.order(); ++x) prod[x] = (out.chars[i][x] + out.chars[j][x]) % c.order;
      table[i][j] = index.at(prod);
    }
  out.group = FiniteGroup::from_table(table, "characters");
  return out;
}

Report aut0_preserves_structure(const ThinCategory& c, const CharacterGroup& aut) {
  Report r("character automorphisms");
  int S = c.size();
  for (int chi = 0; chi < aut.group.order(); ++chi) {
    auto F = [&](int s) { return aut.value(chi, c.grade[s]); };
    for (int s = 0; s < S; ++s) {
      CycloNum th = F(s) * c.twist[s] / F(s);
      r.record("automorphism preserves the twist", th == c.twist[s], std::to_string(chi));
      for (int t = 0; t < S; ++t) {
        int st = c.Tensor(s, t);
        if (st < 0) continue;
        int ts = c.Tensor(c.Act(c.grade[s], t), s);
        CycloNum b = F(ts) * c.Braid(s, t) / F(st);
        r.record("automorphism preserves the braiding", b == c.Braid(s, t), std::to_string(chi));
      }
    }
  }
  return r;
}

ExtensionResult canonical_extension(const ThinCategory& c, const CharacterGroup& aut,
                                    const std::vector<int>& subgroup) {
  if (!is_pointlike(c) || !c.group.is_abelian())
    throw UnsupportedCategory("canonical extension needs a pointlike category over an abelian group");
  const FiniteGroup& A = aut.group;
  std::vector<int> pos(A.order(), -1);
  for (size_t i = 0; i < subgroup.size(); ++i) {
    if (subgroup[i] < 0 || subgroup[i] >= A.order()) throw DomainError("subgroup element is not a character");
    pos[subgroup[i]] = static_cast<int>(i);
  }
  int h = static_cast<int>(subgroup.size());
  std::vector<std::vector<int>> table(h, std::vector<int>(h));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      int p = pos[A.mul(subgroup[i], subgroup[j])];
      if (p < 0) throw DomainError("character list is not closed under products");
      table[i][j] = p;
    }
  ExtensionResult out;
  out.subgroup = subgroup;
  ThinCategory& r = out.cat;
  r.group = FiniteGroup::from_table(table, "characters");
  r.order = std::lcm(c.order, aut.order);
  r.strict = c.strict;
  r.name = "extension(" + c.name + ")";
  int n = c.size();
  int S = n * h;
  r.allocate(S);
  const FiniteGroup& H = r.group;
  auto idx = [&](int u, int a) { return a * n + u; };
  for (int a = 0; a < h; ++a)
    for (int u = 0; u < n; ++u) {
      int x = idx(u, a);
      r.labels[x] = "(" + c.labels[u] + ",chi" + std::to_string(subgroup[a]) + ")";
      r.grade[x] = a;
      r.dual[x] = idx(c.dual[u], H.inv(a));
      r.twist[x] = aut.value(subgroup[a], c.grade[u]) * c.twist[u];
      r.bval[x] = c.bval[u];
      r.dval[x] = c.dval[u];
      for (int b = 0; b < h; ++b) r.act[b * S + x] = idx(u, H.conj(b, a));
      for (int b = 0; b < h; ++b)
        for (int v = 0; v < n; ++v) {
          int y = idx(v, b);
          int uv = c.Tensor(u, v);
          r.tensor[x * S + y] = uv < 0 ? -1 : idx(uv, H.mul(a, b));
          r.braid[x * S + y] = aut.value(subgroup[a], c.grade[v]) * c.Braid(u, v);
        }
      if (a == H.unit() && c.is_unit(u)) r.units.push_back(x);
    }
  out.report.merge(validate_structure(r));
  if (r.strict) out.report.merge(crossed_invariance_suite(r));
  bool neutral = true;
  for (int u = 0; u < n; ++u) {
    int x = idx(u, H.unit());
    neutral = neutral && r.twist[x] == c.twist[u];
    for (int v = 0; v < n; ++v) neutral = neutral && r.Braid(x, idx(v, H.unit())) == c.Braid(u, v);
  }
  out.report.record("neutral component recovers the base", neutral);
  return out;
}

}  // namespace pitop
