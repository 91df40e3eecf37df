#include "pitop/hopf.hpp"

#include <map>
#include <numeric>

#include "pitop/linalg.hpp"

namespace pitop {

namespace {

using Dims = std::vector<int>;

int total(const Dims& d) { return std::accumulate(d.begin(), d.end(), 1, std::multiplies<int>()); }

Dims decode(const Dims& d, int idx) {
  Dims t(d.size());
  for (int k = static_cast<int>(d.size()) - 1; k >= 0; --k) {
    t[k] = idx % d[k];
    idx /= d[k];
  }
  return t;
}

int encode(const Dims& d, const Dims& t) {
  int idx = 0;
  for (size_t k = 0; k < d.size(); ++k) idx = idx * d[k] + t[k];
  return idx;
}

Vec zeros(int n) { return Vec(n, CycloNum(0)); }

Vec unit_vec(int n, int i) {
  Vec v = zeros(n);
  v[i] = CycloNum(1);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Dims dims_of(const std::vector<const Alg*>& fs) {
  Dims d;
  for (const Alg* a : fs) d.push_back(a->n);
  return d;
}

/// Outer product of one vector per factor.
Vec outer(const std::vector<Vec>& parts) {
  Dims d;
  for (const auto& p : parts) d.push_back(static_cast<int>(p.size()));
  Vec out = zeros(total(d));
  for (int idx = 0; idx < static_cast<int>(out.size()); ++idx) {
    Dims t = decode(d, idx);
    CycloNum c(1);
    for (size_t k = 0; k < parts.size() && !c.is_zero(); ++k) c *= parts[k][t[k]];
    out[idx] = c;
  }
  return out;
}

/// Product in the tensor product of the algebras `fs`, componentwise.
Vec tmul(const std::vector<const Alg*>& fs, const Vec& x, const Vec& y) {
  Dims d = dims_of(fs);
  Vec out = zeros(total(d));
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (x[i].is_zero()) continue;
    Dims ti = decode(d, i);
    for (int j = 0; j < static_cast<int>(y.size()); ++j) {
      if (y[j].is_zero()) continue;
      Dims tj = decode(d, j);
      std::vector<Vec> parts;
      bool zero = false;
      for (size_t k = 0; k < fs.size(); ++k) {
        Vec p = fs[k]->product(fs[k]->basis(ti[k]), fs[k]->basis(tj[k]));
        if (is_zero_vec(p)) {
          zero = true;
          break;
        }
        parts.push_back(std::move(p));
      }
      if (zero) continue;
      Vec o = outer(parts);
      CycloNum c = x[i] * y[j];
      for (size_t k = 0; k < o.size(); ++k)
        if (!o[k].is_zero()) out[k] += c * o[k];
    }
  }
  return out;
}

Vec tunit(const std::vector<const Alg*>& fs) {
  std::vector<Vec> parts;
  for (const Alg* a : fs) parts.push_back(a->unit);
  return outer(parts);
}

/// Applies the linear map `m` (n_in -> n_out) on factor `slot`.
Vec map_at(const Dims& d, const Vec& x, int slot, const Vec& m, int n_out) {
  Dims d2 = d;
  d2[slot] = n_out;
  Vec out = zeros(total(d2));
  for (int idx = 0; idx < static_cast<int>(x.size()); ++idx) {
    if (x[idx].is_zero()) continue;
    Dims t = decode(d, idx);
    int i = t[slot];
    for (int j = 0; j < n_out; ++j) {
      const CycloNum& c = m[i * n_out + j];
      if (c.is_zero()) continue;
      t[slot] = j;
      out[encode(d2, t)] += x[idx] * c;
    }
  }
  return out;
}

/// Replaces factor `slot` by its image under a comultiplication tensor (n -> na (x) nb).
Vec comul_at(const Dims& d, const Vec& x, int slot, const Vec& D, int na, int nb) {
  Dims d2;
  for (int k = 0; k < static_cast<int>(d.size()); ++k) {
    if (k == slot) {
      d2.push_back(na);
      d2.push_back(nb);
    } else {
      d2.push_back(d[k]);
    }
  }
  Vec out = zeros(total(d2));
  for (int idx = 0; idx < static_cast<int>(x.size()); ++idx) {
    if (x[idx].is_zero()) continue;
    Dims t = decode(d, idx);
    int i = t[slot];
    Dims t2(t.begin(), t.begin() + slot);
    t2.push_back(0);
    t2.push_back(0);
    t2.insert(t2.end(), t.begin() + slot + 1, t.end());
    for (int j = 0; j < na; ++j)
      for (int k = 0; k < nb; ++k) {
        const CycloNum& c = D[(i * na + j) * nb + k];
        if (c.is_zero()) continue;
        t2[slot] = j;
        t2[slot + 1] = k;
        out[encode(d2, t2)] += x[idx] * c;
      }
  }
  return out;
}

/// Contracts factor `slot` with a functional.
Vec functional_at(const Dims& d, const Vec& x, int slot, const Vec& f) {
  Dims d2 = d;
  d2.erase(d2.begin() + slot);
  Vec out = zeros(total(d2));
  for (int idx = 0; idx < static_cast<int>(x.size()); ++idx) {
    if (x[idx].is_zero()) continue;
    Dims t = decode(d, idx);
    CycloNum c = f[t[slot]];
    if (c.is_zero()) continue;
    t.erase(t.begin() + slot);
    out[encode(d2, t)] += x[idx] * c;
  }
  return out;
}

/// Inserts `v` as a new factor at `slot`.
Vec insert_at(const Dims& d, const Vec& x, int slot, const Vec& v) {
  Dims d2 = d;
  d2.insert(d2.begin() + slot, static_cast<int>(v.size()));
  Vec out = zeros(total(d2));
  for (int idx = 0; idx < static_cast<int>(x.size()); ++idx) {
    if (x[idx].is_zero()) continue;
    Dims t = decode(d, idx);
    t.insert(t.begin() + slot, 0);
    for (int j = 0; j < static_cast<int>(v.size()); ++j) {
      if (v[j].is_zero()) continue;
      t[slot] = j;
      out[encode(d2, t)] += x[idx] * v[j];
    }
  }
  return out;
}

/// Swaps the two factors of a 2-tensor of dimensions (n0, n1).
Vec flip(int n0, int n1, const Vec& x) {
  Vec out = zeros(n0 * n1);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) out[j * n0 + i] = x[i * n1 + j];
  return out;
}

/// Multiplies the two factors of a 2-tensor in one algebra.
Vec multiply(const Alg& a, const Vec& x) {
  Vec out = zeros(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      const CycloNum& c = x[i * a.n + j];
      if (c.is_zero()) continue;
      for (int k = 0; k < a.n; ++k) {
        const CycloNum& m = a.mul[(i * a.n + j) * a.n + k];
        if (!m.is_zero()) out[k] += c * m;
      }
    }
  return out;
}

Vec dot(const Vec& f, const Vec& x) {
  CycloNum s(0);
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s += f[i] * x[i];
  return {s};
}

Vec scaled(const Vec& v, const CycloNum& c) {
  Vec out = v;
  for (auto& x : out) x *= c;
  return out;
}

/// Delta(e_i) as a 2-tensor.
Vec image(const Vec& D, int na, int nb, int i) {
  return Vec(D.begin() + i * na * nb, D.begin() + (i + 1) * na * nb);
}

bool invertible(const Vec& m, int n_in, int n_out) {
  if (n_in != n_out) return false;
  Matrix mm(n_in, std::vector<CycloNum>(n_out));
  for (int i = 0; i < n_in; ++i)
    for (int j = 0; j < n_out; ++j) mm[i][j] = m[i * n_out + j];
  return rank(mm) == n_in;
}

struct Ctx {
  const PiCoalgebra& a;
  const FiniteGroup& g;
  int G;
  explicit Ctx(const PiCoalgebra& x) : a(x), g(x.group), G(x.group.order()) {}
  const Alg* A(int alpha) const { return &a.alg[alpha]; }
  int n(int alpha) const { return a.alg[alpha].n; }
  int m(int x, int y) const { return g.mul(x, y); }
  int inv(int x) const { return g.inv(x); }
  int conj(int x, int y) const { return g.conj(x, y); }
  const Vec& comul(int x, int y) const { return a.comul[x * G + y]; }
  const Vec& phi(int x, int y) const { return a.phi[x * G + y]; }
  /// Delta_{x,y}(v) for v in A_{xy}.
  Vec delta(int x, int y, const Vec& v) const { return comul_at({n(m(x, y))}, v, 0, comul(x, y), n(x), n(y)); }
  Vec S(int x, const Vec& v) const { return apply(a.antipode[x], n(x), n(inv(x)), v); }
  Vec Phi(int x, int y, const Vec& v) const { return apply(phi(x, y), n(y), n(conj(x, y)), v); }
};

std::string tri(int x, int y, int z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}
std::string duo(int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

void algebra_checks(Report& r, const Alg& a, const std::string& where) {
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < a.n; ++k) {
        Vec l = a.product(a.product(a.basis(i), a.basis(j)), a.basis(k));
        Vec rr = a.product(a.basis(i), a.product(a.basis(j), a.basis(k)));
        r.record("associativity", l == rr, where + " basis " + tri(i, j, k));
      }
  r.check("associativity");
  for (int i = 0; i < a.n; ++i) {
    bool ok = a.product(a.unit, a.basis(i)) == a.basis(i) && a.product(a.basis(i), a.unit) == a.basis(i);
    r.record("unit", ok, where + " basis " + std::to_string(i));
  }
  r.check("unit");
}

}  // namespace

Tens Tens::zero(std::vector<int> d) {
  Tens t;
  t.v = zeros(total(d));
  t.dims = std::move(d);
  return t;
}

Tens Tens::of(const Vec& x) { return Tens{{static_cast<int>(x.size())}, x}; }

bool operator==(const Tens& a, const Tens& b) { return a.dims == b.dims && a.v == b.v; }

Vec Alg::product(const Vec& a, const Vec& b) const {
  Vec out = zeros(n);
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      CycloNum c = a[i] * b[j];
      for (int k = 0; k < n; ++k) {
        const CycloNum& m = mul[(i * n + j) * n + k];
        if (!m.is_zero()) out[k] += c * m;
      }
    }
  }
  return out;
}

Vec Alg::basis(int i) const { return unit_vec(n, i); }

Vec apply(const Vec& m, int n_in, int n_out, const Vec& x) { return map_at({n_in}, x, 0, m, n_out); }

Vec compose(const Vec& f, const Vec& g, int n0, int n1, int n2) {
  Vec out = zeros(n0 * n2);
  for (int i = 0; i < n0; ++i) {
    Vec gi(g.begin() + i * n1, g.begin() + (i + 1) * n1);
    Vec fi = apply(f, n1, n2, gi);
    std::copy(fi.begin(), fi.end(), out.begin() + i * n2);
  }
  return out;
}

Vec identity_map(int n) {
  Vec m = zeros(n * n);
  for (int i = 0; i < n; ++i) m[i * n + i] = CycloNum(1);
  return m;
}

bool operator==(const PiCoalgebra& a, const PiCoalgebra& b) {
  return a.group == b.group && a.alg == b.alg && a.comul == b.comul && a.counit == b.counit &&
         a.antipode == b.antipode && a.phi == b.phi;
}

Vec tensor_inverse(const std::vector<const Alg*>& fs, const Vec& x) {
  int N = total(dims_of(fs));
  // Row j of M is x * e_j; a solution of y^T M = 1^T is a right inverse, hence an inverse.
  Matrix M(N, std::vector<CycloNum>(N));
  for (int j = 0; j < N; ++j) {
    Vec row = tmul(fs, x, unit_vec(N, j));
    for (int k = 0; k < N; ++k) M[j][k] = row[k];
  }
  auto Mi = inverse(M);
  if (!Mi) return {};
  Vec u = tunit(fs);
  Vec y = zeros(N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k)
      if (!u[k].is_zero()) y[j] += u[k] * (*Mi)[k][j];
  return y;
}

Vec algebra_inverse(const Alg& a, const Vec& x) { return tensor_inverse({&a}, x); }

PiCoalgebra as_pi_coalgebra(const HopfAlgebraData& h) {
  PiCoalgebra p;
  p.name = h.name;
  p.group = FiniteGroup();
  p.alg = {h.alg};
  p.comul = {h.comul};
  p.counit = h.counit;
  p.antipode = {h.antipode};
  p.phi = {identity_map(h.alg.n)};
  return p;
}

Report verify_pi_coalgebra(const PiCoalgebra& a) {
  Report r("pi-coalgebra " + a.name);
  Ctx c(a);
  const int G = c.G, e = c.g.unit();
  bool shapes = static_cast<int>(a.alg.size()) == G && static_cast<int>(a.comul.size()) == G * G &&
                static_cast<int>(a.antipode.size()) == G && static_cast<int>(a.counit.size()) == c.n(e);
  r.record("structure tensors have consistent shapes", shapes);
  if (!shapes) return r;
  for (int x = 0; x < G; ++x) algebra_checks(r, a.alg[x], "component " + std::to_string(x));

  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y)
      for (int z = 0; z < G; ++z) {
        int xyz = c.m(c.m(x, y), z);
        for (int i = 0; i < c.n(xyz); ++i) {
          Vec b = c.A(xyz)->basis(i);
          Vec l = comul_at({c.n(c.m(x, y)), c.n(z)}, c.delta(c.m(x, y), z, b), 0, c.comul(x, y), c.n(x), c.n(y));
          Vec rr = comul_at({c.n(x), c.n(c.m(y, z))}, c.delta(x, c.m(y, z), b), 1, c.comul(y, z), c.n(y), c.n(z));
          r.record("coassociativity", l == rr, tri(x, y, z) + " basis " + std::to_string(i));
        }
      }
  r.check("coassociativity");

  for (int x = 0; x < G; ++x)
    for (int i = 0; i < c.n(x); ++i) {
      Vec b = c.A(x)->basis(i);
      Vec l = functional_at({c.n(x), c.n(e)}, c.delta(x, e, b), 1, a.counit);
      Vec rr = functional_at({c.n(e), c.n(x)}, c.delta(e, x, b), 0, a.counit);
      r.record("counit", l == b && rr == b, "component " + std::to_string(x) + " basis " + std::to_string(i));
    }
  r.check("counit");

  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y) {
      int xy = c.m(x, y);
      const Alg& A = a.alg[xy];
      std::vector<const Alg*> fs{c.A(x), c.A(y)};
      for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
          Vec l = c.delta(x, y, A.product(A.basis(i), A.basis(j)));
          Vec rr = tmul(fs, c.delta(x, y, A.basis(i)), c.delta(x, y, A.basis(j)));
          r.record("comultiplication is multiplicative", l == rr, duo(x, y) + " basis " + duo(i, j));
        }
      r.record("comultiplication preserves units", c.delta(x, y, A.unit) == tunit(fs), duo(x, y));
    }
  r.check("comultiplication is multiplicative");
  r.check("comultiplication preserves units");

  const Alg& A1 = a.alg[e];
  for (int i = 0; i < A1.n; ++i)
    for (int j = 0; j < A1.n; ++j) {
      CycloNum l = dot(a.counit, A1.product(A1.basis(i), A1.basis(j)))[0];
      r.record("counit is multiplicative", l == a.counit[i] * a.counit[j], "basis " + duo(i, j));
    }
  r.check("counit is multiplicative");
  r.record("counit preserves the unit", dot(a.counit, A1.unit)[0].is_one());

  for (int x = 0; x < G; ++x) {
    const Alg& A = a.alg[x];
    const Alg& B = a.alg[c.inv(x)];
    std::string w = "component " + std::to_string(x);
    r.record("antipode is bijective", invertible(a.antipode[x], A.n, B.n), w);
    if (A.n != B.n) continue;
    for (int i = 0; i < A.n; ++i)
      for (int j = 0; j < A.n; ++j) {
        Vec l = c.S(x, A.product(A.basis(i), A.basis(j)));
        Vec rr = B.product(c.S(x, A.basis(j)), c.S(x, A.basis(i)));
        r.record("antipode reverses products", l == rr, w + " basis " + duo(i, j));
      }
    r.record("antipode preserves units", c.S(x, A.unit) == B.unit, w);
  }
  r.check("antipode reverses products");
  r.check("antipode preserves units");

  for (int x = 0; x < G; ++x) {
    int xi = c.inv(x);
    const Alg& A = a.alg[x];
    for (int i = 0; i < A1.n; ++i) {
      Vec b = A1.basis(i);
      Vec expect = scaled(A.unit, a.counit[i]);
      Vec l = multiply(A, map_at({c.n(xi), c.n(x)}, c.delta(xi, x, b), 0, a.antipode[xi], c.n(x)));
      Vec rr = multiply(A, map_at({c.n(x), c.n(xi)}, c.delta(x, xi, b), 1, a.antipode[xi], c.n(x)));
      r.record("antipode identity", l == expect && rr == expect, "component " + std::to_string(x) + " basis " + std::to_string(i));
    }
  }
  r.check("antipode identity");
  return r;
}

Report verify_hopf(const HopfAlgebraData& h) {
  Report r("Hopf algebra " + h.name);
  r.merge(verify_pi_coalgebra(as_pi_coalgebra(h)));
  return r;
}

Report verify_crossed(const PiCoalgebra& a) {
  Report r("crossing of " + a.name);
  Ctx c(a);
  const int G = c.G, e = c.g.unit();
  bool shapes = static_cast<int>(a.phi.size()) == G * G;
  r.record("crossing maps present", shapes);
  if (!shapes) return r;
  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y) {
      const Alg& A = a.alg[y];
      const Alg& B = a.alg[c.conj(x, y)];
      std::string w = duo(x, y);
      r.record("crossing maps are bijective", invertible(c.phi(x, y), A.n, B.n), w);
      for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
          Vec l = c.Phi(x, y, A.product(A.basis(i), A.basis(j)));
          Vec rr = B.product(c.Phi(x, y, A.basis(i)), c.Phi(x, y, A.basis(j)));
          r.record("crossing maps are multiplicative", l == rr, w + " basis " + duo(i, j));
        }
      r.record("crossing maps preserve units", c.Phi(x, y, A.unit) == B.unit, w);
      for (int i = 0; i < A.n; ++i) {
        Vec b = A.basis(i);
        Vec l = c.Phi(x, c.inv(y), c.S(y, b));
        Vec rr = c.S(c.conj(x, y), c.Phi(x, y, b));
        r.record("crossing commutes with the antipode", l == rr, w + " basis " + std::to_string(i));
      }
    }
  r.check("crossing maps are multiplicative");
  r.check("crossing maps preserve units");
  r.check("crossing commutes with the antipode");

  for (int x = 0; x < G; ++x)
    for (int i = 0; i < c.n(e); ++i)
      r.record("crossing preserves the counit", dot(a.counit, c.Phi(x, e, c.A(e)->basis(i)))[0] == a.counit[i], "element " + std::to_string(x) + " basis " + std::to_string(i));
  r.check("crossing preserves the counit");

  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y)
      for (int z = 0; z < G; ++z) {
        int yz = c.m(y, z), cy = c.conj(x, y), cz = c.conj(x, z);
        for (int i = 0; i < c.n(yz); ++i) {
          Vec b = c.A(yz)->basis(i);
          Vec l = c.delta(y, z, b);
          l = map_at({c.n(y), c.n(z)}, l, 0, c.phi(x, y), c.n(cy));
          l = map_at({c.n(cy), c.n(z)}, l, 1, c.phi(x, z), c.n(cz));
          Vec rr = c.delta(cy, cz, c.Phi(x, yz, b));
          r.record("crossing commutes with the comultiplication", l == rr, tri(x, y, z) + " basis " + std::to_string(i));
        }
      }
  r.check("crossing commutes with the comultiplication");

  for (int y = 0; y < G; ++y) {
    r.record("neutral element acts trivially", c.phi(e, y) == identity_map(c.n(y)), std::to_string(y));
    for (int x = 0; x < G; ++x)
      for (int x2 = 0; x2 < G; ++x2) {
        int cy = c.conj(x2, y);
        Vec l = c.phi(c.m(x, x2), y);
        Vec rr = compose(c.phi(x, cy), c.phi(x2, y), c.n(y), c.n(cy), c.n(c.conj(x, cy)));
        r.record("crossing is an action", l == rr, tri(x, x2, y));
      }
  }
  r.check("neutral element acts trivially");
  r.check("crossing is an action");
  return r;
}

Report verify_quasitriangular(const PiCoalgebra& a, const RibbonFamily& f) {
  Report r("quasitriangular structure on " + a.name);
  Ctx c(a);
  const int G = c.G;
  bool shapes = static_cast<int>(f.R.size()) == G * G;
  r.record("R family present", shapes);
  if (!shapes) return r;
  auto R = [&](int x, int y) -> const Vec& { return f.R[x * G + y]; };

  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y)
      r.record("R is invertible", !tensor_inverse({c.A(x), c.A(y)}, R(x, y)).empty(), duo(x, y));

  // R Delta(a) = Perm((phi_{x^-1} (x) id) Delta_{x y x^-1, x}(a)) R.
  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y) {
      int xy = c.m(x, y), cy = c.conj(x, y), xi = c.inv(x);
      std::vector<const Alg*> fs{c.A(x), c.A(y)};
      for (int i = 0; i < c.n(xy); ++i) {
        Vec b = c.A(xy)->basis(i);
        Vec l = tmul(fs, R(x, y), c.delta(x, y, b));
        Vec t = map_at({c.n(cy), c.n(x)}, c.delta(cy, x, b), 0, c.phi(xi, cy), c.n(y));
        Vec rr = tmul(fs, flip(c.n(y), c.n(x), t), R(x, y));
        r.record("R intertwines the comultiplications", l == rr, duo(x, y) + " basis " + std::to_string(i));
      }
    }
  r.check("R intertwines the comultiplications");

  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y)
      for (int z = 0; z < G; ++z) {
        std::vector<const Alg*> fs{c.A(x), c.A(y), c.A(z)};
        Vec R13 = insert_at({c.n(x), c.n(z)}, R(x, z), 1, c.A(y)->unit);
        Vec R12 = insert_at({c.n(x), c.n(y)}, R(x, y), 2, c.A(z)->unit);
        Vec R23 = insert_at({c.n(y), c.n(z)}, R(y, z), 0, c.A(x)->unit);
        Vec l = comul_at({c.n(x), c.n(c.m(y, z))}, R(x, c.m(y, z)), 1, c.comul(y, z), c.n(y), c.n(z));
        r.record("R on the second comultiplication", l == tmul(fs, R13, R12), tri(x, y, z));
        int bxb = c.conj(c.inv(y), x);
        Vec twisted = map_at({c.n(bxb), c.n(z)}, R(bxb, z), 0, c.phi(y, bxb), c.n(x));
        Vec T13 = insert_at({c.n(x), c.n(z)}, twisted, 1, c.A(y)->unit);
        Vec l2 = comul_at({c.n(c.m(x, y)), c.n(z)}, R(c.m(x, y), z), 0, c.comul(x, y), c.n(x), c.n(y));
        r.record("R on the first comultiplication", l2 == tmul(fs, T13, R23), tri(x, y, z));
        Vec lhs = tmul(fs, tmul(fs, R12, T13), R23);
        Vec rhs = tmul(fs, tmul(fs, R23, R13), R12);
        r.record("Yang-Baxter", lhs == rhs, tri(x, y, z));
      }
  r.check("R on the second comultiplication");
  r.check("R on the first comultiplication");
  r.check("Yang-Baxter");

  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y)
      for (int z = 0; z < G; ++z) {
        int cy = c.conj(x, y), cz = c.conj(x, z);
        Vec l = map_at({c.n(y), c.n(z)}, R(y, z), 0, c.phi(x, y), c.n(cy));
        l = map_at({c.n(cy), c.n(z)}, l, 1, c.phi(x, z), c.n(cz));
        r.record("R is invariant under the crossing", l == R(cy, cz), tri(x, y, z));
      }
  r.check("R is invariant under the crossing");
  return r;
}

Report verify_ribbon(const PiCoalgebra& a, const RibbonFamily& f) {
  Report r("twist on " + a.name);
  Ctx c(a);
  const int G = c.G;
  bool shapes = static_cast<int>(f.theta.size()) == G && static_cast<int>(f.R.size()) == G * G;
  r.record("twist family present", shapes);
  if (!shapes) return r;
  std::vector<Vec> inv(G);
  for (int x = 0; x < G; ++x) {
    inv[x] = algebra_inverse(a.alg[x], f.theta[x]);
    r.record("twist is invertible", !inv[x].empty(), std::to_string(x));
  }
  if (!r.ok()) return r;
  for (int x = 0; x < G; ++x) {
    const Alg& A = a.alg[x];
    for (int i = 0; i < A.n; ++i) {
      Vec b = A.basis(i);
      r.record("crossing is conjugation by the twist", c.Phi(x, x, b) == A.product(A.product(inv[x], b), f.theta[x]), std::to_string(x) + " basis " + std::to_string(i));
    }
    r.record("antipode maps the twist", c.S(x, f.theta[x]) == f.theta[c.inv(x)], std::to_string(x));
  }
  r.check("crossing is conjugation by the twist");
  r.check("antipode maps the twist");
  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y) {
      std::vector<const Alg*> fs{c.A(x), c.A(y)};
      Vec l = c.delta(x, y, f.theta[c.m(x, y)]);
      Vec t = map_at({c.n(y), c.n(x)}, f.R[y * G + x], 1, c.phi(x, x), c.n(x));
      Vec tt = outer({f.theta[x], f.theta[y]});
      Vec rr = tmul(fs, tmul(fs, tt, flip(c.n(y), c.n(x), t)), f.R[x * G + y]);
      r.record("comultiplication of the twist", l == rr, duo(x, y));
      r.record("twist is invariant under the crossing", c.Phi(x, y, f.theta[y]) == f.theta[c.conj(x, y)], duo(x, y));
    }
  r.check("comultiplication of the twist");
  r.check("twist is invariant under the crossing");
  return r;
}

Report verify_ribbon_hopf(const HopfAlgebraData& h, const Vec& R, const Vec& v) {
  Report r("ribbon Hopf algebra " + h.name);
  PiCoalgebra p = as_pi_coalgebra(h);
  RibbonFamily f{{R}, {v}};
  r.merge(verify_hopf(h));
  r.merge(verify_quasitriangular(p, f));
  r.merge(verify_ribbon(p, f));
  return r;
}

PiCoalgebra build_A_pi(const HopfAlgebraData& h, const FiniteGroup& group, const std::vector<Vec>& action,
                       ApiVariant variant) {
  int G = group.order(), n = h.alg.n;
  if (static_cast<int>(action.size()) != G) throw DomainError("action needs one map per group element");
  PiCoalgebra p;
  p.name = h.name + (variant == ApiVariant::Plain ? "^pi" : "^pi-bar");
  p.group = group;
  p.alg.assign(G, h.alg);
  p.counit = h.counit;
  p.comul.resize(G * G);
  p.phi.resize(G * G);
  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y) {
      p.phi[x * G + y] = action[x];
      if (variant == ApiVariant::Plain) {
        p.comul[x * G + y] = h.comul;
      } else {
        // (y (x) id) Delta, basis vector by basis vector.
        Vec D = zeros(n * n * n);
        for (int i = 0; i < n; ++i) {
          Vec t = map_at({n, n}, image(h.comul, n, n, i), 0, action[y], n);
          std::copy(t.begin(), t.end(), D.begin() + i * n * n);
        }
        p.comul[x * G + y] = D;
      }
    }
  for (int x = 0; x < G; ++x)
    p.antipode.push_back(variant == ApiVariant::Plain ? h.antipode : compose(action[x], h.antipode, n, n, n));
  return p;
}

GroupLikes group_likes(const HopfAlgebraData& h) {
  int n = h.alg.n;
  std::vector<int> found;
  for (int i = 0; i < n; ++i) {
    Vec b = h.alg.basis(i);
    if (image(h.comul, n, n, i) == outer({b, b}) && h.counit[i].is_one()) found.push_back(i);
  }
  std::map<int, int> where;
  for (size_t k = 0; k < found.size(); ++k) where[found[k]] = static_cast<int>(k);
  std::vector<std::vector<int>> table(found.size(), std::vector<int>(found.size()));
  for (size_t a = 0; a < found.size(); ++a)
    for (size_t b = 0; b < found.size(); ++b) {
      Vec p = h.alg.product(h.alg.basis(found[a]), h.alg.basis(found[b]));
      int hit = -1;
      for (int k : found)
        if (p == h.alg.basis(k)) hit = k;
      if (hit < 0) throw DomainError("group-like basis vectors are not closed under multiplication");
      table[a][b] = where[hit];
    }
  GroupLikes gl;
  gl.group = FiniteGroup::from_table(table, "G(" + h.name + ")");
  gl.basis_index = found;
  return gl;
}

std::vector<Vec> conjugation_action(const HopfAlgebraData& h, const GroupLikes& gl) {
  int n = h.alg.n;
  std::vector<Vec> out;
  for (int x = 0; x < gl.group.order(); ++x) {
    Vec g = h.alg.basis(gl.basis_index[x]);
    Vec gi = h.alg.basis(gl.basis_index[gl.group.inv(x)]);
    Vec m = zeros(n * n);
    for (int i = 0; i < n; ++i) {
      Vec t = h.alg.product(h.alg.product(g, h.alg.basis(i)), gi);
      std::copy(t.begin(), t.end(), m.begin() + i * n);
    }
    out.push_back(m);
  }
  return out;
}

RibbonPiCoalgebra build_R_theta_from_ribbon(const HopfAlgebraData& h, const Vec& R, const Vec& v,
                                            ApiVariant variant) {
  GroupLikes gl = group_likes(h);
  const FiniteGroup& g = gl.group;
  int G = g.order();
  RibbonPiCoalgebra out;
  out.A = build_A_pi(h, g, conjugation_action(h, gl), variant);
  std::vector<const Alg*> fs{&h.alg, &h.alg};
  auto gv = [&](int x) { return h.alg.basis(gl.basis_index[x]); };
  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y) {
      if (variant == ApiVariant::Plain)
        out.family.R.push_back(tmul(fs, outer({h.alg.unit, gv(g.inv(x))}), R));
      else
        out.family.R.push_back(tmul(fs, R, outer({gv(g.inv(y)), h.alg.unit})));
    }
  for (int x = 0; x < G; ++x) out.family.theta.push_back(h.alg.product(v, gv(g.inv(x))));
  return out;
}

PiCoalgebra mirror_coalgebra(const PiCoalgebra& a) {
  Ctx c(a);
  const int G = c.G;
  PiCoalgebra m;
  m.name = "mirror(" + a.name + ")";
  m.group = a.group;
  m.counit = a.counit;
  for (int x = 0; x < G; ++x) m.alg.push_back(a.alg[c.inv(x)]);
  m.comul.resize(G * G);
  m.phi.resize(G * G);
  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y) {
      int yi = c.inv(y), xi = c.inv(x);
      int src = c.m(yi, xi);  // component of the mirror at xy
      int left = c.conj(yi, xi);
      int na = c.n(xi), nb = c.n(yi), ns = c.n(src);
      Vec D = zeros(ns * na * nb);
      for (int i = 0; i < ns; ++i) {
        Vec t = map_at({c.n(left), nb}, c.delta(left, yi, c.A(src)->basis(i)), 0, c.phi(y, left), na);
        std::copy(t.begin(), t.end(), D.begin() + i * na * nb);
      }
      m.comul[x * G + y] = D;
      m.phi[x * G + y] = c.phi(x, yi);
    }
  for (int x = 0; x < G; ++x)
    m.antipode.push_back(compose(c.phi(x, x), a.antipode[c.inv(x)], c.n(c.inv(x)), c.n(x), c.n(x)));
  return m;
}

RibbonFamily mirror_family(const PiCoalgebra& a, const RibbonFamily& f) {
  Ctx c(a);
  const int G = c.G;
  RibbonFamily out;
  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y) {
      int xi = c.inv(x), yi = c.inv(y);
      Vec p = flip(c.n(yi), c.n(xi), f.R[yi * G + xi]);
      Vec inv = tensor_inverse({c.A(xi), c.A(yi)}, p);
      if (inv.empty()) throw DomainError("R family is not invertible");
      out.R.push_back(inv);
    }
  for (int x = 0; x < static_cast<int>(f.theta.size()); ++x) {
    Vec inv = algebra_inverse(a.alg[c.inv(x)], f.theta[c.inv(x)]);
    if (inv.empty()) throw DomainError("twist is not invertible");
    out.theta.push_back(inv);
  }
  return out;
}

Vec drinfeld_element(const PiCoalgebra& a, const RibbonFamily& f, int x) {
  Ctx c(a);
  int xi = c.inv(x);
  const Vec& R = f.R[x * c.G + xi];
  const Alg& A = a.alg[x];
  Vec u = zeros(A.n);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < c.n(xi); ++j) {
      const CycloNum& r = R[i * c.n(xi) + j];
      if (r.is_zero()) continue;
      Vec t = A.product(c.S(xi, c.A(xi)->basis(j)), A.basis(i));
      for (int k = 0; k < A.n; ++k) u[k] += r * t[k];
    }
  return u;
}

Report verify_spherical(const PiCoalgebra& a, const std::vector<Vec>& w) {
  Report r("spherical structure on " + a.name);
  Ctx c(a);
  const int G = c.G, e = c.g.unit();
  if (static_cast<int>(w.size()) != G) {
    r.record("spherical family present", false);
    return r;
  }
  std::vector<Vec> inv(G);
  for (int x = 0; x < G; ++x) {
    inv[x] = algebra_inverse(a.alg[x], w[x]);
    r.record("spherical element is invertible", !inv[x].empty(), std::to_string(x));
  }
  if (!r.ok()) return r;
  for (int x = 0; x < G; ++x) {
    const Alg& A = a.alg[x];
    for (int i = 0; i < A.n; ++i) {
      Vec b = A.basis(i);
      r.record("square of the antipode is inner", c.S(c.inv(x), c.S(x, b)) == A.product(A.product(w[x], b), inv[x]), std::to_string(x) + " basis " + std::to_string(i));
    }
    r.record("antipode inverts the spherical element", c.S(x, w[x]) == inv[c.inv(x)], std::to_string(x));
    for (int y = 0; y < G; ++y) {
      r.record("spherical element is group-like", c.delta(x, y, w[c.m(x, y)]) == outer({w[x], w[y]}), duo(x, y));
      r.record("spherical element is invariant", c.Phi(x, y, w[y]) == w[c.conj(x, y)], duo(x, y));
    }
    for (int j = 0; j < A.n; ++j) {
      CycloNum t1(0), t2(0);
      for (int i = 0; i < A.n; ++i) {
        t1 += A.product(A.product(w[x], A.basis(i)), A.basis(j))[i];
        t2 += A.product(A.product(inv[x], A.basis(i)), A.basis(j))[i];
      }
      r.record("trace condition", t1 == t2, std::to_string(x) + " right multiplication " + std::to_string(j));
    }
  }
  r.check("square of the antipode is inner");
  r.check("antipode inverts the spherical element");
  r.check("spherical element is group-like");
  r.check("spherical element is invariant");
  r.record("counit of the spherical element", dot(a.counit, w[e])[0].is_one());
  r.check("trace condition");
  r.note("trace condition", "partial: checked on right multiplications of the regular module only");
  return r;
}

HopfAlgebraData group_algebra(const FiniteGroup& g) {
  int n = g.order();
  HopfAlgebraData h;
  h.name = "K[" + g.spec() + "]";
  h.alg.n = n;
  h.alg.mul = zeros(n * n * n);
  h.comul = zeros(n * n * n);
  h.antipode = zeros(n * n);
  h.counit = Vec(n, CycloNum(1));
  h.alg.unit = unit_vec(n, g.unit());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) h.alg.mul[(a * n + b) * n + g.mul(a, b)] = CycloNum(1);
    h.comul[(a * n + a) * n + a] = CycloNum(1);
    h.antipode[a * n + g.inv(a)] = CycloNum(1);
  }
  return h;
}

HopfAlgebraData sweedler_h4() {
  // Basis index a + 2b for g^a x^b; x g = -g x, x^2 = 0, g^2 = 1.
  const int n = 4;
  HopfAlgebraData h;
  h.name = "H4";
  h.alg.n = n;
  h.alg.mul = zeros(n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int a = i % 2, b = i / 2, cc = j % 2, d = j / 2;
      if (b + d > 1) continue;
      int sign = (b * cc) % 2 ? -1 : 1;
      h.alg.mul[(i * n + j) * n + ((a + cc) % 2 + 2 * (b + d))] = CycloNum(sign);
    }
  h.alg.unit = unit_vec(n, 0);
  h.comul = zeros(n * n * n);
  auto put = [&](int i, int j, int k, long v) { h.comul[(i * n + j) * n + k] += CycloNum(v); };
  put(0, 0, 0, 1);
  put(1, 1, 1, 1);
  put(2, 2, 0, 1);  // x (x) 1
  put(2, 1, 2, 1);  // g (x) x
  put(3, 3, 1, 1);  // gx (x) g
  put(3, 0, 3, 1);  // 1 (x) gx
  h.counit = {CycloNum(1), CycloNum(1), CycloNum(0), CycloNum(0)};
  h.antipode = zeros(n * n);
  h.antipode[0 * n + 0] = CycloNum(1);
  h.antipode[1 * n + 1] = CycloNum(1);
  h.antipode[2 * n + 3] = CycloNum(-1);
  h.antipode[3 * n + 2] = CycloNum(1);
  return h;
}

Vec sweedler_r_matrix(const mpq_class& t) {
  Vec R = zeros(16);
  CycloNum h(mpq_class(1, 2)), ht(t / 2);
  auto at = [&](int i, int j) -> CycloNum& { return R[i * 4 + j]; };
  at(0, 0) += h;
  at(0, 1) += h;
  at(1, 0) += h;
  at(1, 1) -= h;
  at(2, 2) += ht;
  at(2, 3) -= ht;
  at(3, 3) += ht;
  at(3, 2) += ht;
  return R;
}

Vec z2_r_matrix() {
  CycloNum h(mpq_class(1, 2));
  return {h, h, h, -h};
}

}  // namespace pitop
