#include "pitop/group.hpp"

#include <sstream>

namespace pitop {

FiniteGroup::FiniteGroup() : mul_{{0}}, inv_{0}, unit_(0), spec_("trivial"), factors_{} {}

std::optional<std::string> check_group_table(const std::vector<std::vector<int>>& t) {
  int n = static_cast<int>(t.size());
  if (n == 0) return "empty table";
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(t[i].size()) != n) return "row " + std::to_string(i) + " has wrong length";
    for (int x : t[i])
      if (x < 0 || x >= n) return "entry out of range in row " + std::to_string(i);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) {
          std::ostringstream os;
          os << "associativity fails at (" << a << "," << b << "," << c << ")";
          return os.str();
        }
  int unit = -1;
  for (int e = 0; e < n && unit < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = t[e][a] == a && t[a][e] == a;
    if (ok) unit = e;
  }
  if (unit < 0) return "no two-sided unit";
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = t[a][b] == unit && t[b][a] == unit;
    if (!found) return "element " + std::to_string(a) + " has no inverse";
  }
  return std::nullopt;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
  if (auto err = check_group_table(table)) throw GroupError("invalid group table: " + *err);
  FiniteGroup g;
  int n = static_cast<int>(table.size());
  g.mul_ = std::move(table);
  g.spec_ = std::move(name);
  g.factors_.clear();
  for (int e = 0; e < n; ++e)
    if (g.mul_[e][e] == e) g.unit_ = e;
  g.inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul_[a][b] == g.unit_) g.inv_[a] = b;
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw GroupError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  FiniteGroup g = from_table(std::move(t), "cyclic:" + std::to_string(n));
  g.factors_ = {n};
  return g;
}

FiniteGroup FiniteGroup::product(const std::vector<int>& orders) {
  if (orders.empty()) return FiniteGroup();
  int n = 1;
  for (int o : orders) {
    if (o < 1) throw GroupError("factor orders must be positive");
    n *= o;
  }
  auto digits = [&](int a) {
    std::vector<int> d(orders.size());
    for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) {
      d[i] = a % orders[i];
      a /= orders[i];
    }
    return d;
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto da = digits(a), db = digits(b);
      int v = 0;
      for (size_t i = 0; i < orders.size(); ++i) v = v * orders[i] + (da[i] + db[i]) % orders[i];
      t[a][b] = v;
    }
  std::string name = "product:";
  for (size_t i = 0; i < orders.size(); ++i) name += (i ? "x" : "") + std::to_string(orders[i]);
  FiniteGroup g = from_table(std::move(t), name);
  g.factors_ = orders;
  return g;
}

FiniteGroup FiniteGroup::parse(const std::string& spec) {
  if (spec == "trivial") return FiniteGroup();
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw GroupError("unknown group description '" + spec + "'");
  std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
  try {
    if (kind == "cyclic") return cyclic(std::stoi(rest));
    if (kind == "product") {
      std::vector<int> orders;
      std::stringstream ss(rest);
      std::string item;
      while (std::getline(ss, item, 'x')) orders.push_back(std::stoi(item));
      return product(orders);
    }
  } catch (const std::invalid_argument&) {
    throw GroupError("malformed group description '" + spec + "'");
  }
  throw GroupError("unknown group description '" + spec + "'");
}

int FiniteGroup::pow(int a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = unit_;
  for (long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != unit_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::digits(int a) const {
  std::vector<int> d(factors_.size());
  for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
    d[i] = a % factors_[i];
    a /= factors_[i];
  }
  return d;
}

GroupHom GroupHom::free(std::vector<std::string> generators, std::vector<int> images,
                        const FiniteGroup& target) {
  if (generators.size() != images.size()) throw GroupError("generator/image count mismatch");
  for (int x : images)
    if (x < 0 || x >= target.order()) throw GroupError("generator image out of range");
  GroupHom h;
  h.target_ = target;
  h.gens_ = std::move(generators);
  h.images_ = std::move(images);
  return h;
}

GroupHom GroupHom::finite(const FiniteGroup& source, std::vector<int> images, const FiniteGroup& target) {
  if (static_cast<int>(images.size()) != source.order()) throw GroupError("image table has wrong size");
  for (int x : images)
    if (x < 0 || x >= target.order()) throw GroupError("image out of range");
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b)
      if (images[source.mul(a, b)] != target.mul(images[a], images[b]))
        throw GroupError("not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  GroupHom h;
  h.source_ = source;
  h.target_ = target;
  h.images_ = std::move(images);
  return h;
}

int GroupHom::operator()(int a) const {
  if (is_free()) throw GroupError("free source: use evaluate_word");
  return images_.at(a);
}

int GroupHom::evaluate_word(const std::vector<std::string>& word) const {
  int r = target_.unit();
  for (const auto& tok : word) {
    std::string name = tok;
    bool inverse = false;
    if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0) {
      inverse = true;
      name.resize(name.size() - 3);
    }
    int img = -1;
    if (is_free()) {
      for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == name) img = images_[i];
    } else {
      try {
        int idx = std::stoi(name);
        if (idx >= 0 && idx < source_->order()) img = images_[idx];
      } catch (const std::exception&) {
      }
    }
    if (img < 0) throw GroupError("unknown generator '" + name + "'");
    r = target_.mul(r, inverse ? target_.inv(img) : img);
  }
  return r;
}

bool GroupHom::respects(const std::vector<std::vector<std::string>>& relators) const {
  for (const auto& w : relators)
    if (evaluate_word(w) != target_.unit()) return false;
  return true;
}

CosetSystem right_cosets(const FiniteGroup& pi, const std::vector<bool>& in_subgroup,
                         const std::vector<int>& preferred_reps) {
  int n = pi.order();
  if (static_cast<int>(in_subgroup.size()) != n) throw GroupError("subgroup mask has wrong size");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (in_subgroup[a] && in_subgroup[b] && !in_subgroup[pi.mul(a, b)])
        throw GroupError("subgroup mask is not closed under multiplication");
  if (!in_subgroup[pi.unit()]) throw GroupError("subgroup mask does not contain the unit");
  CosetSystem cs;
  cs.coset_of.assign(n, -1);
  auto add_coset = [&](int w) {
    int idx = static_cast<int>(cs.reps.size());
    cs.reps.push_back(w);
    for (int g = 0; g < n; ++g)
      if (in_subgroup[g]) cs.coset_of[pi.mul(g, w)] = idx;
  };
  if (!preferred_reps.empty()) {
    for (int w : preferred_reps) {
      if (w < 0 || w >= n) throw GroupError("coset representative out of range");
      if (cs.coset_of[w] >= 0) throw GroupError("two representatives lie in the same right coset");
      add_coset(w);
    }
    for (int a = 0; a < n; ++a)
      if (cs.coset_of[a] < 0) throw GroupError("representatives do not cover every right coset");
    return cs;
  }
  add_coset(pi.unit());
  for (int a = 0; a < n; ++a)
    if (cs.coset_of[a] < 0) add_coset(a);
  return cs;
}

}  // namespace pitop
