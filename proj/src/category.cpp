#include "pitop/category.hpp"

#include <algorithm>
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

void require_strict(const ThinCategory& c, const char* what) {
  if (!c.strict) throw UnsupportedCategory(std::string(what) + " needs a strict category (trivial associator)");
}

}  // namespace

std::vector<int> ThinCategory::component(int alpha) const {
  std::vector<int> out;
  for (int s = 0; s < size(); ++s)
    if (grade[s] == alpha) out.push_back(s);
  return out;
}

bool ThinCategory::is_unit(int s) const { return std::find(units.begin(), units.end(), s) != units.end(); }

int ThinCategory::unit() const {
  if (units.size() != 1)
    throw UnsupportedCategory("the unit object splits into " + std::to_string(units.size()) + " simples");
  return units[0];
}

void ThinCategory::allocate(int S) {
  int n = group.order();
  labels.assign(S, "");
  grade.assign(S, group.unit());
  dual.assign(S, 0);
  act.assign(static_cast<size_t>(n) * S, 0);
  for (int a = 0; a < n; ++a)
    for (int s = 0; s < S; ++s) act[a * S + s] = s;
  tensor.assign(static_cast<size_t>(S) * S, -1);
  braid.assign(static_cast<size_t>(S) * S, CycloNum(1));
  twist.assign(S, CycloNum(1));
  bval.assign(S, CycloNum(1));
  dval.assign(S, CycloNum(1));
  units.clear();
}

bool operator==(const ThinCategory& a, const ThinCategory& b) {
  return a.group == b.group && a.grade == b.grade && a.dual == b.dual && a.act == b.act &&
         a.tensor == b.tensor && a.units == b.units && a.braid == b.braid && a.twist == b.twist &&
         a.bval == b.bval && a.dval == b.dval && a.strict == b.strict;
}

Report validate_structure(const ThinCategory& c) {
  const FiniteGroup& g = c.group;
  int S = c.size();
  int n = g.order();
  Report r("category structure");
  r.record("unit object is nonempty", !c.units.empty());
  for (int u : c.units) r.record("unit simples have neutral grade", c.grade[u] == g.unit(), tup({u}));
  for (int s = 0; s < S; ++s) {
    r.record("duality is an involution", c.dual[c.dual[s]] == s, tup({s}));
    r.record("duality inverts the grade", c.grade[c.dual[s]] == g.inv(c.grade[s]), tup({s}));
    r.record("unit action is the identity", c.Act(g.unit(), s) == s, tup({s}));
    r.record("a simple is fixed by its own grade", c.Act(c.grade[s], s) == s, tup({s}));
    int p = c.Tensor(s, c.dual[s]);
    r.record("a simple pairs with its dual into the unit", p >= 0 && c.is_unit(p), tup({s}));
    for (const auto* x : {&c.twist[s], &c.bval[s], &c.dval[s]})
      r.record("scalar constants invertible", !x->is_zero(), tup({s}));
    for (int u : c.units) {
      int l = c.Tensor(u, s), rr = c.Tensor(s, u);
      bool ok = (l == -1 || l == s) && (rr == -1 || rr == s);
      r.record("unit simples act as units", ok, tup({u, s}));
      if (c.strict && l == s) r.record("braiding with the unit is trivial", c.Braid(u, s).is_one(), tup({u, s}));
      if (c.strict && rr == s) r.record("braiding with the unit is trivial", c.Braid(s, u).is_one(), tup({s, u}));
    }
    bool has_unit = false;
    for (int u : c.units) has_unit = has_unit || c.Tensor(u, s) == s;
    r.record("some unit simple acts on every simple", has_unit, tup({s}));
    for (int a = 0; a < n; ++a) {
      int as = c.Act(a, s);
      r.record("action conjugates the grade", c.grade[as] == g.conj(a, c.grade[s]), tup({a, s}));
      r.record("action commutes with duality", c.Act(a, c.dual[s]) == c.dual[as], tup({a, s}));
      for (int b = 0; b < n; ++b)
        r.record("action is a group action", c.Act(g.mul(a, b), s) == c.Act(a, c.Act(b, s)), tup({a, b, s}));
    }
    for (int t = 0; t < S; ++t) {
      int st = c.Tensor(s, t);
      if (st < 0) continue;
      r.record("tensor multiplies grades", c.grade[st] == g.mul(c.grade[s], c.grade[t]), tup({s, t}));
      r.record("braiding constants invertible", !c.Braid(s, t).is_zero(), tup({s, t}));
      for (int a = 0; a < n; ++a) {
        int at = c.Tensor(c.Act(a, s), c.Act(a, t));
        r.record("action respects tensor", at == c.Act(a, st), tup({a, s, t}));
      }
      for (int w = 0; w < S; ++w) {
        int l = c.Tensor(st, w);
        int tw = c.Tensor(t, w);
        int rr = tw < 0 ? -1 : c.Tensor(s, tw);
        r.record("tensor is associative", l == rr, tup({s, t, w}));
      }
    }
  }
  for (int u : c.units) r.record("unit simples are self-dual", c.dual[u] == u, tup({u}));
  return r;
}

ThinCategory pointlike_category(const RibbonTuple& t) {
  if (!t.has_theta) throw DomainError("pointlike category needs a twist table");
  Report rep = verify_tuple(t);
  if (!rep.ok()) throw DomainError("tuple fails verification:\n" + rep.str());
  const FiniteGroup& g = t.group;
  int n = g.order();
  ThinCategory c;
  c.group = g;
  c.order = t.order;
  c.name = "pointlike(" + g.spec() + ")";
  c.allocate(n);
  c.strict = t.a_trivial();
  std::vector<CycloNum> d;
  if (!c.strict) d = derived_identities(t).d;
  for (int x = 0; x < n; ++x) {
    c.labels[x] = "V" + std::to_string(x);
    c.grade[x] = x;
    c.dual[x] = g.inv(x);
    for (int a = 0; a < n; ++a) c.act[a * n + x] = g.conj(a, x);
    for (int y = 0; y < n; ++y) {
      c.tensor[x * n + y] = g.mul(x, y);
      c.braid[x * n + y] = t.C(x, y);
    }
    c.twist[x] = t.theta[x];
    c.bval[x] = t.b[x];
    c.dval[x] = c.strict ? t.b[x].inv() : d[x];
  }
  c.units = {g.unit()};
  return c;
}

CycloNum categorical_dim(const ThinCategory& c, int s) {
  require_strict(c, "categorical dimension");
  return c.dval[s] * c.Braid(s, c.dual[s]) * c.twist[s] * c.bval[s];
}

ColorElement ColorAlgebra::basis(int s) const {
  ColorElement e = zero();
  e[s] = 1;
  return e;
}

ColorElement ColorAlgebra::unit() const {
  ColorElement e = zero();
  for (int u : cat.units) e[u] = 1;
  return e;
}

ColorElement ColorAlgebra::mul(const ColorElement& x, const ColorElement& y) const {
  ColorElement z = zero();
  for (int s = 0; s < size(); ++s) {
    if (x[s].is_zero()) continue;
    for (int t = 0; t < size(); ++t) {
      if (y[t].is_zero()) continue;
      int st = cat.Tensor(s, t);
      if (st >= 0) z[st] += x[s] * y[t];
    }
  }
  return z;
}

ColorElement ColorAlgebra::act(int alpha, const ColorElement& x) const {
  ColorElement z = zero();
  for (int s = 0; s < size(); ++s)
    if (!x[s].is_zero()) z[cat.Act(alpha, s)] += x[s];
  return z;
}

ColorElement ColorAlgebra::star(const ColorElement& x) const {
  ColorElement z = zero();
  for (int s = 0; s < size(); ++s)
    if (!x[s].is_zero()) z[cat.dual[s]] += x[s];
  return z;
}

CycloNum ColorAlgebra::dim(const ColorElement& x) const {
  CycloNum d;
  for (int s = 0; s < size(); ++s)
    if (!x[s].is_zero()) d += x[s] * dims[s];
  return d;
}

int ColorAlgebra::grade_of(const ColorElement& x) const {
  int gr = -1;
  for (int s = 0; s < size(); ++s) {
    if (x[s].is_zero()) continue;
    if (gr >= 0 && gr != cat.grade[s]) return -1;
    gr = cat.grade[s];
  }
  return gr;
}

ColorAlgebra verlinde_algebra(const ThinCategory& c) {
  ColorAlgebra a;
  a.cat = c;
  for (int s = 0; s < c.size(); ++s) a.dims.push_back(c.strict ? categorical_dim(c, s) : CycloNum(0));
  return a;
}

Report verify_color_algebra(const ColorAlgebra& A) {
  const ThinCategory& c = A.cat;
  const FiniteGroup& g = c.group;
  int S = A.size();
  Report r("color algebra");
  ColorElement one = A.unit();
  for (int s = 0; s < S; ++s) {
    ColorElement e = A.basis(s);
    r.record("unit is two-sided", A.mul(one, e) == e && A.mul(e, one) == e, tup({s}));
    int gs = c.grade[s];
    r.record("grade is fixed by its own action", A.act(gs, e) == e, tup({s}));
    r.record("involution reverses grades", A.grade_of(A.star(e)) == g.inv(gs), tup({s}));
    for (int a = 0; a < g.order(); ++a)
      r.record("action conjugates grades", A.grade_of(A.act(a, e)) == g.conj(a, gs), tup({a, s}));
    for (int t = 0; t < S; ++t) {
      ColorElement f = A.basis(t);
      ColorElement ef = A.mul(e, f);
      bool zero = std::all_of(ef.begin(), ef.end(), [](const CycloNum& x) { return x.is_zero(); });
      r.record("product respects grading", zero || A.grade_of(ef) == g.mul(gs, c.grade[t]), tup({s, t}));
      r.record("crossed commutativity", ef == A.mul(A.act(gs, f), e), tup({s, t}));
      if (c.strict) r.record("dimension is multiplicative", A.dim(ef) == A.dim(e) * A.dim(f), tup({s, t}));
      for (int w = 0; w < S; ++w) {
        ColorElement h = A.basis(w);
        r.record("product is associative", A.mul(ef, h) == A.mul(e, A.mul(f, h)), tup({s, t, w}));
      }
    }
  }
  if (c.strict) r.record("dimension of the unit", A.dim(one) == CycloNum(static_cast<long>(c.units.size())));
  return r;
}

ModularData modular_data(const ThinCategory& c, int dsign) {
  require_strict(c, "modular data");
  const FiniteGroup& g = c.group;
  ModularData m;
  Report& r = m.report;
  r.record("unit object is simple", c.units.size() == 1, std::to_string(c.units.size()) + " unit simples");
  if (c.units.size() != 1) throw NotModular("unit object is not simple:\n" + r.str());
  r.record("finitely many simples per component", true);
  r.note("every object is a sum of simples", "automatic for thin categories");
  r.record("every object is a sum of simples", true);
  r.record("no morphisms between distinct simples", true);
  for (int a = 0; a < g.order(); ++a) m.counts.push_back(static_cast<int>(c.component(a).size()));
  std::vector<int> I1 = c.component(g.unit());
  size_t k = I1.size();
  m.S.assign(k, std::vector<CycloNum>(k, CycloNum(0)));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      int a = I1[i], b = I1[j];
      int ab = c.Tensor(a, b);
      if (ab >= 0) m.S[i][j] = c.Braid(a, b) * c.Braid(b, a) * categorical_dim(c, ab);
    }
  bool invertible = rank(m.S) == static_cast<int>(k);
  r.record("S-matrix invertible", invertible);
  if (!invertible) {
    std::ostringstream os;
    os << "S-matrix is singular:\n";
    for (const auto& row : m.S) {
      for (const auto& x : row) os << "  " << x.str();
      os << "\n";
    }
    throw NotModular(os.str());
  }
  for (int s : I1) {
    CycloNum d = categorical_dim(c, s);
    CycloNum d2 = d * d;
    m.D2 += d2;
    m.delta_plus += c.twist[s] * d2;
    m.delta_minus += c.twist[s].inv() * d2;
  }
  m.D = sqrt_in_field(m.D2, c.order, dsign < 0);
  r.record("rank squares to the sum of squared dimensions", m.D * m.D == m.D2);
  r.record("product of the Gauss sums equals the squared rank", m.delta_plus * m.delta_minus == m.D2);
  return m;
}

ColorElement canonical_color(const ThinCategory& c, int alpha) {
  ColorElement w(c.size(), CycloNum(0));
  for (int s : c.component(alpha)) w[s] = categorical_dim(c, s);
  return w;
}

CycloNum component_weight(const ThinCategory& c, int alpha) {
  CycloNum w;
  for (int s : c.component(alpha)) {
    CycloNum d = categorical_dim(c, s);
    w += d * d;
  }
  return w;
}

Report verify_canonical_colors(const ThinCategory& c) {
  const FiniteGroup& g = c.group;
  ColorAlgebra A = verlinde_algebra(c);
  Report r("canonical colors");
  int n = g.order();
  std::vector<ColorElement> w;
  for (int a = 0; a < n; ++a) w.push_back(canonical_color(c, a));
  for (int a = 0; a < n; ++a) {
    r.record("dual of a canonical color", A.star(w[a]) == w[g.inv(a)], tup({a}));
    for (int b = 0; b < n; ++b) {
      r.record("action on canonical colors", A.act(a, w[b]) == w[g.conj(a, b)], tup({a, b}));
    }
    for (int s = 0; s < c.size(); ++s) {
      ColorElement lhs = A.mul(w[a], A.basis(s));
      ColorElement rhs = w[g.mul(a, c.grade[s])];
      CycloNum d = A.dims[s];
      for (auto& x : rhs) x *= d;
      r.record("canonical color absorbs a simple", lhs == rhs, tup({a, s}));
    }
  }
  return r;
}

Report crossed_invariance_suite(const ThinCategory& c) {
  require_strict(c, "crossed invariance suite");
  const FiniteGroup& g = c.group;
  int S = c.size();
  int n = g.order();
  Report r("crossed invariance");
  std::vector<CycloNum> dims(S);
  for (int s = 0; s < S; ++s) dims[s] = categorical_dim(c, s);
  for (int u = 0; u < S; ++u) {
    int gu = c.grade[u];
    r.record("dual twist", c.twist[c.dual[u]] == c.twist[u], tup({u}));
    r.record("dimension of the dual", dims[c.dual[u]] == dims[u], tup({u}));
    r.record("dimension is nonzero", !dims[u].is_zero(), tup({u}));
    for (int a = 0; a < n; ++a) {
      int au = c.Act(a, u);
      r.record("action preserves the twist", c.twist[au] == c.twist[u], tup({a, u}));
      r.record("action preserves duality constants", c.bval[au] == c.bval[u] && c.dval[au] == c.dval[u],
               tup({a, u}));
      r.record("action preserves dimension", dims[au] == dims[u], tup({a, u}));
    }
    for (int v = 0; v < S; ++v) {
      int uv = c.Tensor(u, v);
      if (uv < 0) continue;
      int uV = c.Act(gu, v);
      r.record("dimension is multiplicative", dims[uv] == dims[u] * dims[v], tup({u, v}));
      for (int a = 0; a < n; ++a)
        r.record("action preserves the braiding", c.Braid(c.Act(a, u), c.Act(a, v)) == c.Braid(u, v),
                 tup({a, u, v}));
      CycloNum rhs = c.Braid(uV, u) * c.Braid(u, v) * c.twist[u] * c.twist[v];
      r.record("twist of a tensor product", c.twist[uv] == rhs, tup({u, v}));
      for (int w = 0; w < S; ++w) {
        int vw = c.Tensor(v, w);
        if (vw < 0 || c.Tensor(uv, w) < 0) continue;
        int uW = c.Act(gu, w);
        int vW = c.Act(c.grade[v], w);
        // U V W -> UV U W -> UV UW U  versus  U V W -> U VW V -> U(VW) UV U
        CycloNum lhs = c.Braid(u, v) * c.Braid(u, w) * c.Braid(uV, uW);
        CycloNum rhs3 = c.Braid(v, w) * c.Braid(u, vW) * c.Braid(u, v);
        r.record("Yang-Baxter", lhs == rhs3, tup({u, v, w}));
        r.record("braiding multiplicative in the second slot", c.Braid(u, vw) == c.Braid(u, v) * c.Braid(u, w),
                 tup({u, v, w}));
        r.record("braiding multiplicative in the first slot",
                 c.Braid(uv, w) == c.Braid(v, w) * c.Braid(u, vW), tup({u, v, w}));
      }
    }
  }
  return r;
}

}  // namespace pitop
