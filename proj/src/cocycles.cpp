#include "pitop/cocycles.hpp"

#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

namespace pitop {

namespace {

std::string tup(std::initializer_list<int> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int x : xs) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ")";
  return os.str();
}

void check_cap(const FiniteGroup& g) {
  if (g.order() > g_max_tuple_group_order)
    throw DomainError("group order " + std::to_string(g.order()) + " exceeds the configured cap " +
                      std::to_string(g_max_tuple_group_order));
}

// Greedy generating set.
std::vector<int> generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<bool> reached(g.order(), false);
  reached[g.unit()] = true;
  auto close = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < g.order(); ++x) {
        if (!reached[x]) continue;
        for (int s : gens) {
          int y = g.mul(x, s);
          if (!reached[y]) {
            reached[y] = true;
            changed = true;
          }
        }
      }
    }
  };
  for (int x = 0; x < g.order(); ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    close();
  }
  return gens;
}

// Extends generator values into a hom g -> Z/m (additive), or fails.
std::optional<std::vector<long>> extend_additive(const FiniteGroup& g, const std::vector<int>& gens,
                                                 const std::vector<long>& vals, long m) {
  std::vector<long> f(g.order(), -1);
  f[g.unit()] = 0;
  std::vector<int> queue{g.unit()};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (size_t i = 0; i < gens.size(); ++i) {
      int y = g.mul(x, gens[i]);
      long v = (f[x] + vals[i]) % m;
      if (f[y] < 0) {
        f[y] = v;
        queue.push_back(y);
      } else if (f[y] != v) {
        return std::nullopt;
      }
    }
  }
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (f[g.mul(x, y)] != (f[x] + f[y]) % m) return std::nullopt;
  return f;
}

}  // namespace

RibbonTuple RibbonTuple::ones(const FiniteGroup& g, long order) {
  RibbonTuple t;
  t.group = g;
  t.order = order;
  int n = g.order();
  CycloNum one = CycloNum::rational(1, order);
  t.a.assign(static_cast<size_t>(n) * n * n, one);
  t.b.assign(n, one);
  t.c.assign(static_cast<size_t>(n) * n, one);
  t.theta.assign(n, one);
  t.has_theta = true;
  return t;
}

RibbonTuple RibbonTuple::from_exponents(const FiniteGroup& g, long order, const std::vector<long>& a_exp,
                                        const std::vector<long>& b_exp, const std::vector<long>& c_exp,
                                        const std::vector<long>& theta_exp) {
  size_t n = g.order();
  if (a_exp.size() != n * n * n || b_exp.size() != n || c_exp.size() != n * n)
    throw DomainError("tuple table shapes do not match the group order");
  if (!theta_exp.empty() && theta_exp.size() != n) throw DomainError("theta table has wrong length");
  RibbonTuple t;
  t.group = g;
  t.order = order;
  for (long e : a_exp) t.a.push_back(CycloNum::root(order, e));
  for (long e : b_exp) t.b.push_back(CycloNum::root(order, e));
  for (long e : c_exp) t.c.push_back(CycloNum::root(order, e));
  for (long e : theta_exp) t.theta.push_back(CycloNum::root(order, e));
  t.has_theta = !theta_exp.empty();
  return t;
}

bool RibbonTuple::a_trivial() const {
  for (const auto& x : a)
    if (!x.is_one()) return false;
  return true;
}

bool operator==(const RibbonTuple& s, const RibbonTuple& t) {
  if (!(s.group == t.group) || s.has_theta != t.has_theta) return false;
  return s.a == t.a && s.b == t.b && s.c == t.c && (!s.has_theta || s.theta == t.theta);
}

Report verify_associator(const RibbonTuple& t) {
  check_cap(t.group);
  const FiniteGroup& g = t.group;
  int n = g.order();
  Report r("associator");
  for (const auto& x : t.a) r.record("associator entries invertible", !x.is_zero());
  for (const auto& x : t.b) r.record("duality entries invertible", !x.is_zero());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          CycloNum lhs = t.A(g.mul(x, y), z, w) * t.A(x, y, g.mul(z, w));
          CycloNum rhs = t.A(x, y, z) * t.A(x, g.mul(y, z), w) * t.A(y, z, w);
          r.record("3-cocycle identity", lhs == rhs, tup({x, y, z, w}));
        }
  for (int d = 0; d < n; ++d)
    for (int x = 0; x < n; ++x) {
      r.record("duality conjugation invariance", t.b[g.conj(d, x)] == t.b[x], tup({d, x}));
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          r.record("associator conjugation invariance",
                   t.A(g.conj(d, x), g.conj(d, y), g.conj(d, z)) == t.A(x, y, z), tup({d, x, y, z}));
    }
  return r;
}

Report verify_braiding(const RibbonTuple& t) {
  check_cap(t.group);
  const FiniteGroup& g = t.group;
  int n = g.order();
  Report r("braiding");
  for (const auto& x : t.c) r.record("braiding entries invertible", !x.is_zero());
  Report assoc = verify_associator(t);
  bool premises = assoc.ok();
  for (int d = 0; d < n; ++d)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        r.record("braiding conjugation invariance", t.C(g.conj(d, x), g.conj(d, y)) == t.C(x, y),
                 tup({d, x, y}));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // c_{x,yz} = c_{x,y} c_{x,z} a_{x,y,z}^-1 a_{xyx^-1,x,z} a_{y,z,x}^-1
        CycloNum rhs = t.C(x, y) * t.C(x, z) * t.A(g.conj(x, y), x, z) /
                       (t.A(x, y, z) * t.A(y, z, x));
        r.record("braiding multiplicative in the second slot", t.C(x, g.mul(y, z)) == rhs, tup({x, y, z}));
        // c_{yd,z} = c_{y,z} c_{d,z} a_{ydy^-1,y,z} a_{d,z,y}^-1 a_{dzd^-1,d,y}, with d = x
        int d = x;
        CycloNum rhs2 = t.C(y, z) * t.C(d, z) * t.A(g.conj(y, d), y, z) * t.A(g.conj(d, z), d, y) /
                        t.A(d, z, y);
        r.record("braiding multiplicative in the first slot", t.C(g.mul(y, d), z) == rhs2, tup({y, d, z}));
      }
  premises = premises && r.passed("braiding multiplicative in the second slot") &&
             r.passed("braiding multiplicative in the first slot");
  bool conclusion = r.passed("braiding conjugation invariance");
  r.record("conjugation invariance implied by the cocycle identities", !premises || conclusion,
           "premises hold but braiding is not conjugation invariant");
  return r;
}

Report verify_twist(const RibbonTuple& t) {
  const FiniteGroup& g = t.group;
  int n = g.order();
  Report r("twist");
  if (!t.has_theta) {
    r.record("twist present", false, "tuple has no twist table");
    return r;
  }
  for (int x = 0; x < n; ++x) {
    r.record("twist entries invertible", !t.theta[x].is_zero(), tup({x}));
    r.record("twist inverse symmetry", t.theta[g.inv(x)] == t.theta[x], tup({x}));
    for (int y = 0; y < n; ++y) {
      CycloNum rhs = t.C(x, y) * t.C(y, x) * t.theta[x] * t.theta[y];
      r.record("twist product rule", t.theta[g.mul(x, y)] == rhs, tup({x, y}));
      r.record("twist conjugation invariance", t.theta[g.mul(x, y)] == t.theta[g.mul(y, x)], tup({x, y}));
    }
  }
  return r;
}

Report verify_tuple(const RibbonTuple& t) {
  Report r("ribbon tuple");
  r.merge(verify_associator(t));
  r.merge(verify_braiding(t));
  if (t.has_theta) r.merge(verify_twist(t));
  return r;
}

std::vector<std::vector<int>> sign_characters(const FiniteGroup& g) {
  std::vector<int> gens = generators(g);
  std::vector<std::vector<int>> out;
  size_t k = gens.size();
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    std::vector<long> vals(k);
    for (size_t i = 0; i < k; ++i) vals[i] = (mask >> i) & 1;
    auto f = extend_additive(g, gens, vals, 2);
    if (!f) continue;
    std::vector<int> s(g.order());
    for (int x = 0; x < g.order(); ++x) s[x] = (*f)[x] ? -1 : 1;
    out.push_back(s);
  }
  return out;
}

std::vector<CycloNum> canonical_twist(const RibbonTuple& t, const std::vector<CycloNum>& chi) {
  const FiniteGroup& g = t.group;
  int n = g.order();
  if (static_cast<int>(chi.size()) != n) throw DomainError("character table has wrong length");
  for (int x = 0; x < n; ++x) {
    if (!(chi[x] * chi[x]).is_one())
      throw DomainError("character value at " + std::to_string(x) + " is not +1 or -1");
    for (int y = 0; y < n; ++y)
      if (chi[g.mul(x, y)] != chi[x] * chi[y])
        throw DomainError("sign table is not a homomorphism at " + tup({x, y}));
  }
  std::vector<CycloNum> th(n);
  for (int x = 0; x < n; ++x) th[x] = chi[x] * t.C(x, x);
  return th;
}

std::vector<CycloNum> canonical_twist(const RibbonTuple& t, const std::vector<int>& signs) {
  std::vector<CycloNum> chi;
  for (int s : signs) chi.emplace_back(static_cast<long>(s));
  return canonical_twist(t, chi);
}

bool twist_ratio_is_sign_character(const FiniteGroup& g, const std::vector<CycloNum>& theta1,
                                   const std::vector<CycloNum>& theta2) {
  int n = g.order();
  std::vector<CycloNum> ratio(n);
  for (int x = 0; x < n; ++x) {
    ratio[x] = theta1[x] / theta2[x];
    if (!(ratio[x] * ratio[x]).is_one()) return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (ratio[g.mul(x, y)] != ratio[x] * ratio[y]) return false;
  return true;
}

RibbonTuple coboundary(const TwoCochain& e) {
  const FiniteGroup& g = e.group;
  int n = g.order();
  if (static_cast<int>(e.eta.size()) != n * n) throw DomainError("2-cochain table has wrong size");
  for (int d = 0; d < n; ++d)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (e.E(g.conj(d, x), g.conj(d, y)) != e.E(x, y))
          throw DomainError("2-cochain is not conjugation invariant at (delta,alpha,beta)=" + tup({d, x, y}));
  RibbonTuple t = RibbonTuple::ones(g, e.order);
  t.has_theta = false;
  t.theta.clear();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      t.C(x, y) = e.E(x, y) / e.E(y, x);
      for (int z = 0; z < n; ++z)
        t.A(x, y, z) = e.E(x, y) * e.E(g.mul(x, y), z) / (e.E(x, g.mul(y, z)) * e.E(y, z));
    }
  return t;
}

DerivedIdentities derived_identities(const RibbonTuple& t) {
  const FiniteGroup& g = t.group;
  int n = g.order();
  int one = g.unit();
  DerivedIdentities out{Report("derived identities"), {}};
  for (int x = 0; x < n; ++x) {
    out.report.record("associator normalized at the unit", t.A(one, x, one).is_one(), tup({x}));
    int xi = g.inv(x);
    CycloNum d1 = (t.b[x] * t.A(x, xi, x) * t.A(x, one, one) * t.A(one, one, x)).inv();
    CycloNum d2 = t.A(xi, x, xi) * t.A(xi, one, one) * t.A(one, one, xi) / t.b[x];
    out.report.record("two duality expressions agree", d1 == d2, tup({x}));
    out.d.push_back(d1);
  }
  return out;
}

RibbonTuple tuple_product(const RibbonTuple& s, const RibbonTuple& t) {
  if (!(s.group == t.group)) throw DomainError("tuple product needs a common group");
  RibbonTuple r = s;
  r.order = std::lcm(s.order, t.order);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = s.a[i] * t.a[i];
  for (size_t i = 0; i < r.b.size(); ++i) r.b[i] = s.b[i] * t.b[i];
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = s.c[i] * t.c[i];
  r.has_theta = s.has_theta && t.has_theta;
  r.theta.clear();
  if (r.has_theta)
    for (size_t i = 0; i < s.theta.size(); ++i) r.theta.push_back(s.theta[i] * t.theta[i]);
  return r;
}

RibbonTuple tuple_mirror(const RibbonTuple& t) {
  const FiniteGroup& g = t.group;
  int n = g.order();
  RibbonTuple r = t;
  for (int x = 0; x < n; ++x) {
    r.b[x] = t.b[g.inv(x)];
    if (t.has_theta) r.theta[x] = t.theta[x].inv();
    for (int y = 0; y < n; ++y) {
      r.C(x, y) = t.C(g.inv(y), g.inv(x)).inv();
      int yi = g.inv(y);
      for (int z = 0; z < n; ++z) r.A(x, y, z) = t.A(g.conj(yi, g.inv(x)), yi, g.inv(z));
    }
  }
  return r;
}

std::vector<std::vector<long>> characters(const FiniteGroup& g, long order) {
  std::vector<int> gens = generators(g);
  std::vector<std::vector<long>> out;
  size_t k = gens.size();
  std::vector<long> vals(k, 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == k) {
      if (auto f = extend_additive(g, gens, vals, order)) out.push_back(*f);
      return;
    }
    for (long v = 0; v < order; ++v) {
      vals[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<RibbonTuple> enumerate_bicharacter_tuples(const FiniteGroup& g, long order) {
  if (!g.is_abelian()) throw DomainError("bicharacter enumeration needs an abelian group");
  int n = g.order();
  auto chars = characters(g, order);
  std::vector<int> gens = generators(g);
  size_t k = gens.size();
  std::vector<RibbonTuple> out;
  std::vector<size_t> pick(k, 0);
  // Assign a character to each generator in the first slot; keep the assignments that
  // extend to a homomorphism into the character group.
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == k) {
      std::vector<std::vector<long>> row(n);
      std::vector<bool> set(n, false);
      row[g.unit()] = std::vector<long>(n, 0);
      set[g.unit()] = true;
      std::vector<int> queue{g.unit()};
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (size_t j = 0; j < k; ++j) {
          int y = g.mul(x, gens[j]);
          std::vector<long> v(n);
          for (int z = 0; z < n; ++z) v[z] = (row[x][z] + chars[pick[j]][z]) % order;
          if (!set[y]) {
            row[y] = v;
            set[y] = true;
            queue.push_back(y);
          } else if (row[y] != v) {
            return;
          }
        }
      }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (row[g.mul(x, y)][z] != (row[x][z] + row[y][z]) % order) return;
      std::vector<long> c_exp(static_cast<size_t>(n) * n), th(n);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) c_exp[x * n + y] = row[x][y];
        th[x] = row[x][x];
      }
      out.push_back(RibbonTuple::from_exponents(g, order, std::vector<long>(static_cast<size_t>(n) * n * n, 0),
                                                std::vector<long>(n, 0), c_exp, th));
      return;
    }
    for (size_t c = 0; c < chars.size(); ++c) {
      pick[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace pitop
