#include "pitop/hqft2d.hpp"

#include <sstream>

namespace pitop {

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
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

void add_to(SparseVec& acc, int k, const CycloNum& v) {
  if (v.is_zero()) return;
  CycloNum& slot = acc[k];
  slot += v;
  if (slot.is_zero()) acc.erase(k);
}

CycloNum coeff(const SparseVec& v, int k) {
  auto it = v.find(k);
  return it == v.end() ? CycloNum(0) : it->second;
}

bool same(const SparseVec& a, const SparseVec& b) {
  // Entries are kept nonzero by add_to, but tables built by hand may hold zeros.
  for (const auto& [k, v] : a)
    if (!(coeff(b, k) == v)) return false;
  for (const auto& [k, v] : b)
    if (!(coeff(a, k) == v)) return false;
  return true;
}

}  // namespace

std::vector<int> CrossedAlgebra::component(int alpha) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (grade[i] == alpha) out.push_back(i);
  return out;
}

SparseVec CrossedAlgebra::product(const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b)
      for (const auto& [k, z] : mul[i][j]) add_to(out, k, x * y * z);
  return out;
}

SparseVec CrossedAlgebra::act(int alpha, const SparseVec& a) const {
  SparseVec out;
  for (const auto& [i, x] : a)
    for (const auto& [k, z] : phi[alpha][i]) add_to(out, k, x * z);
  return out;
}

CycloNum CrossedAlgebra::pair(const SparseVec& a, const SparseVec& b) const {
  CycloNum out(0);
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out += x * y * eta[i][j];
  return out;
}

CrossedAlgebra crossed_algebra(const ThinCategory& c) {
  CrossedAlgebra a;
  int n = c.size();
  a.group = c.group;
  a.grade = c.grade;
  a.labels = c.labels;
  a.mul.assign(n, std::vector<SparseVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int t = c.Tensor(i, j);
      if (t >= 0) a.mul[i][j][t] = CycloNum(1);
    }
  for (int u : c.units) a.unit[u] = CycloNum(1);
  a.eta.assign(n, std::vector<CycloNum>(n, CycloNum(0)));
  for (int i = 0; i < n; ++i) a.eta[i][c.dual[i]] = CycloNum(1);
  a.phi.assign(c.group.order(), std::vector<SparseVec>(n));
  for (int g = 0; g < c.group.order(); ++g)
    for (int i = 0; i < n; ++i) a.phi[g][i][c.Act(g, i)] = CycloNum(1);
  return a;
}

Report verify_crossed_algebra(const CrossedAlgebra& a) {
  const FiniteGroup& g = a.group;
  Report r("crossed algebra");
  int n = a.dim();
  int order = g.order();
  std::vector<SparseVec> e(n);
  for (int i = 0; i < n; ++i) e[i] = a.basis(i);

  // Graded algebra.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool ok = true;
      for (const auto& [k, v] : a.mul[i][j])
        if (!v.is_zero() && a.grade[k] != g.mul(a.grade[i], a.grade[j])) ok = false;
      r.record("multiplication respects the grading", ok, tuple_str({i, j}));
    }
  for (int i = 0; i < n; ++i) {
    r.record("unit is neutral", same(a.product(a.unit, e[i]), e[i]) && same(a.product(e[i], a.unit), e[i]),
             tuple_str({i}));
    for (int j = 0; j < n; ++j) {
      SparseVec ij = a.product(e[i], e[j]);
      for (int k = 0; k < n; ++k) {
        SparseVec jk = a.product(e[j], e[k]);
        r.record("associativity", same(a.product(ij, e[k]), a.product(e[i], jk)), tuple_str({i, j, k}));
        r.record("pairing is invariant", a.pair(ij, e[k]) == a.pair(e[i], jk), tuple_str({i, j, k}));
      }
    }
  }
  bool unit_neutral = true;
  for (const auto& [k, v] : a.unit)
    if (!v.is_zero() && a.grade[k] != g.unit()) unit_neutral = false;
  r.record("unit lies in the neutral component", unit_neutral);

  // Pairing.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.record("pairing is symmetric", a.eta[i][j] == a.eta[j][i], tuple_str({i, j}));
      if (g.mul(a.grade[i], a.grade[j]) != g.unit())
        r.record("pairing vanishes off inverse components", a.eta[i][j].is_zero(), tuple_str({i, j}));
    }
  for (int al = 0; al < order; ++al) {
    std::vector<int> A = a.component(al), B = a.component(g.inv(al));
    bool ok = A.size() == B.size();
    if (ok && !A.empty()) {
      Matrix m(A.size(), std::vector<CycloNum>(B.size()));
      for (size_t x = 0; x < A.size(); ++x)
        for (size_t y = 0; y < B.size(); ++y) m[x][y] = a.eta[A[x]][B[y]];
      ok = rank(m) == static_cast<int>(A.size());
    }
    r.record("pairing is nondegenerate on inverse components", ok, tuple_str({al}));
  }

  // Action.
  for (int i = 0; i < n; ++i) r.record("neutral element acts trivially", same(a.act(g.unit(), e[i]), e[i]), tuple_str({i}));
  for (int al = 0; al < order; ++al) {
    r.record("action fixes the unit", same(a.act(al, a.unit), a.unit), tuple_str({al}));
    for (int be = 0; be < order; ++be)
      for (int i = 0; i < n; ++i)
        r.record("action is a homomorphism", same(a.act(al, a.act(be, e[i])), a.act(g.mul(al, be), e[i])),
                 tuple_str({al, be, i}));
    for (int i = 0; i < n; ++i) {
      SparseVec pi = a.act(al, e[i]);
      bool graded = true;
      for (const auto& [k, v] : pi)
        if (!v.is_zero() && a.grade[k] != g.conj(al, a.grade[i])) graded = false;
      r.record("action conjugates the grading", graded, tuple_str({al, i}));
      if (a.grade[i] == al) r.record("an element's own grade fixes it", same(pi, e[i]), tuple_str({al, i}));
      for (int j = 0; j < n; ++j) {
        SparseVec pj = a.act(al, e[j]);
        r.record("action is multiplicative", same(a.act(al, a.product(e[i], e[j])), a.product(pi, pj)),
                 tuple_str({al, i, j}));
        r.record("action preserves the pairing", a.pair(pi, pj) == a.eta[i][j], tuple_str({al, i, j}));
      }
    }
  }
  // Crossed commutativity: phi_alpha(b) a = a b for a in L_alpha.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.record("crossed commutativity",
               same(a.product(a.act(a.grade[i], e[j]), e[i]), a.product(e[i], e[j])), tuple_str({i, j}));

  // Trace identity.
  for (int al = 0; al < order; ++al)
    for (int be = 0; be < order; ++be) {
      int comm = g.mul(g.mul(al, be), g.mul(g.inv(al), g.inv(be)));
      std::vector<int> A = a.component(al), B = a.component(be);
      for (int cidx : a.component(comm)) {
        CycloNum lhs(0), rhs(0);
        for (int i : A) lhs += coeff(a.product(e[cidx], a.act(be, e[i])), i);
        for (int k : B) rhs += coeff(a.act(g.inv(al), a.product(e[cidx], e[k])), k);
        r.record("trace identity", lhs == rhs, tuple_str({al, be, cidx}));
      }
    }
  r.check("trace identity");
  return r;
}

std::string to_string(MutationTarget t) {
  switch (t) {
    case MutationTarget::Pairing: return "pairing";
    case MutationTarget::Action: return "action";
    case MutationTarget::Multiplication: return "multiplication";
  }
  return "?";
}

Mutation mutate(CrossedAlgebra& a, std::mt19937_64& rng) {
  auto uni = [&](int hi) { return std::uniform_int_distribution<int>(0, hi - 1)(rng); };
  int n = a.dim();
  Mutation m;
  m.target = static_cast<MutationTarget>(uni(3));
  switch (m.target) {
    case MutationTarget::Pairing: {
      int i = uni(n), j = uni(n);
      a.eta[i][j] += CycloNum(1);
      m.where = "eta" + tuple_str({i, j});
      break;
    }
    case MutationTarget::Action: {
      int g = uni(a.group.order()), i = uni(n), k = uni(n);
      add_to(a.phi[g][i], k, CycloNum(1));
      m.where = "phi" + tuple_str({g, i, k});
      break;
    }
    case MutationTarget::Multiplication: {
      int i = uni(n), j = uni(n), k = uni(n);
      add_to(a.mul[i][j], k, CycloNum(1));
      m.where = "mul" + tuple_str({i, j, k});
      break;
    }
  }
  return m;
}

int surface_relation(const FiniteGroup& g, const SurfaceSpec& s) {
  if (s.alphas.size() != s.betas.size()) throw DomainError("alphas and betas differ in length");
  int x = g.unit();
  for (const Mark& m : s.marks) x = g.mul(x, m.eps > 0 ? m.mu : g.inv(m.mu));
  for (size_t k = 0; k < s.alphas.size(); ++k) {
    int a = s.alphas[k], b = s.betas[k];
    x = g.mul(x, g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  }
  return x;
}

namespace {

// Multiset of simples; the unit object starts as the sum of the unit simples.
using Multiset = std::vector<long>;

Multiset unit_multiset(const ThinCategory& c) {
  Multiset m(c.size(), 0);
  for (int u : c.units) m[u] += 1;
  return m;
}

Multiset tensor_with(const ThinCategory& c, const Multiset& x, int s) {
  Multiset out(c.size(), 0);
  for (int t = 0; t < c.size(); ++t)
    if (x[t]) {
      int r = c.Tensor(t, s);
      if (r >= 0) out[r] += x[t];
    }
  return out;
}

long hom_from_unit(const ThinCategory& c, const Multiset& x) {
  long n = 0;
  for (int u : c.units) n += x[u];
  return n;
}

long count_rec(const ThinCategory& c, const SurfaceSpec& s, size_t k, const Multiset& x) {
  if (k == s.alphas.size()) return hom_from_unit(c, x);
  long total = 0;
  for (int i : c.component(s.alphas[k])) {
    Multiset y = tensor_with(c, x, i);
    y = tensor_with(c, y, c.dual[c.Act(s.betas[k], i)]);
    total += count_rec(c, s, k + 1, y);
  }
  return total;
}

}  // namespace

long block_count(const ThinCategory& c, const SurfaceSpec& s) {
  if (s.alphas.size() != s.betas.size()) throw DomainError("alphas and betas differ in length");
  Multiset x = unit_multiset(c);
  for (const Mark& m : s.marks) {
    if (m.color < 0 || m.color >= c.size() || c.grade[m.color] != m.mu)
      throw DomainError("mark colour does not lie over its label");
    x = tensor_with(c, x, m.eps > 0 ? m.color : c.dual[m.color]);
  }
  return count_rec(c, s, 0, x);
}

long block_dimension(const ThinCategory& c, const SurfaceSpec& s) {
  if (surface_relation(c.group, s) != c.group.unit())
    throw DomainError("surface relation fails: product of mark labels and commutators is " +
                      std::to_string(surface_relation(c.group, s)));
  return block_count(c, s);
}

long closed_surface_value(const ThinCategory& c, const std::vector<int>& alphas, const std::vector<int>& betas) {
  SurfaceSpec s;
  s.alphas = alphas;
  s.betas = betas;
  return block_dimension(c, s);
}

long torus_fixed_points(const ThinCategory& c, int alpha, int beta) {
  long n = 0;
  for (int i : c.component(alpha))
    if (c.Act(beta, i) == i) ++n;
  return n;
}

std::vector<long> torus_mark_counts(const ThinCategory& c, int eps, int color, int alpha, int beta) {
  const FiniteGroup& g = c.group;
  Multiset x = tensor_with(c, unit_multiset(c), eps > 0 ? color : c.dual[color]);
  std::vector<long> out(3, 0);
  for (int i : c.component(alpha))
    out[0] += hom_from_unit(c, tensor_with(c, tensor_with(c, x, i), c.dual[c.Act(beta, i)]));
  int conj = g.conj(alpha, beta);
  for (int j : c.component(conj))
    out[1] += hom_from_unit(c, tensor_with(c, tensor_with(c, x, j), c.dual[c.Act(g.inv(alpha), j)]));
  for (int k : c.component(beta))
    out[2] += hom_from_unit(c, tensor_with(c, tensor_with(c, x, c.Act(alpha, k)), c.dual[k]));
  return out;
}

Report verify_splitting(const ThinCategory& c, int alpha) {
  Report r("splitting");
  const FiniteGroup& g = c.group;
  Multiset one = unit_multiset(c);
  std::vector<int> I = c.component(alpha);
  for (int v : c.component(alpha))
    for (int w : c.component(g.inv(alpha))) {
      long lhs = hom_from_unit(c, tensor_with(c, tensor_with(c, one, v), w));
      long rhs = 0;
      for (int i : I)
        rhs += hom_from_unit(c, tensor_with(c, tensor_with(c, one, v), c.dual[i])) *
               hom_from_unit(c, tensor_with(c, tensor_with(c, one, i), w));
      r.record("Hom splits along the simples of the component", lhs == rhs, tuple_str({alpha, v, w}));
    }
  r.check("Hom splits along the simples of the component");
  return r;
}

}  // namespace pitop
