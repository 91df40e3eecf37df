#include "pitop/fixtures.hpp"

#include <algorithm>
#include <array>
#include <filesystem>

namespace pitop {

namespace {

RibbonTuple abelian_pullback(const FiniteGroup& g, long N, const std::vector<std::vector<int>>& image) {
  int n = g.order();
  std::vector<long> a(static_cast<size_t>(n) * n * n, 0), b(n, 0), c(static_cast<size_t>(n) * n), th(n);
  // c(x, y) = (-1)^(q(x) . q(y)) for the abelianization q onto an elementary 2-group.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      long dot = 0;
      for (size_t k = 0; k < image[x].size(); ++k) dot += image[x][k] * image[y][k];
      c[x * n + y] = (dot % 2) * (N / 2);
    }
  for (int x = 0; x < n; ++x) th[x] = c[x * n + x];
  return RibbonTuple::from_exponents(g, N, a, b, c, th);
}

SurgeryPresentation hopf_link_surgery(const ThinCategory& c) {
  int u = c.unit();
  Seed s{c.grade[u], u, true};
  SurgeryPresentation p;
  p.name = "hopf00";
  p.diagram.events = {Event::cup(0, 1, s),   Event::cup(2, -1, s), Event::cross(1, 1),
                      Event::cross(1, 1),    Event::cap(2, -1),    Event::cap(0, 1)};
  return p;
}

}  // namespace

FiniteGroup symmetric_group_s3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> r;
      for (int i = 0; i < 3; ++i) r[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), r) - perms.begin());
    }
  return FiniteGroup::from_table(t, "S3");
}

FiniteGroup quaternion_group() {
  // Unit products u*v = sign * w on (1, i, j, k).
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int u = a / 2, v = b / 2;
      int s = (a % 2 + b % 2 + neg[u][v]) % 2;
      t[a][b] = 2 * unit[u][v] + s;
    }
  return FiniteGroup::from_table(t, "Q8");
}

RibbonTuple cyclic_bicharacter_tuple(int n) {
  FiniteGroup g = FiniteGroup::cyclic(n);
  std::vector<long> a(static_cast<size_t>(n) * n * n, 0), b(n, 0), c(static_cast<size_t>(n) * n), th(n);
  for (int x = 0; x < n; ++x) {
    th[x] = (x * x) % n;
    for (int y = 0; y < n; ++y) c[x * n + y] = (x * y) % n;
  }
  return RibbonTuple::from_exponents(g, n, a, b, c, th);
}

RibbonTuple s3_abelianization_tuple() {
  FiniteGroup g = symmetric_group_s3();
  std::vector<std::vector<int>> q(6);
  for (int x = 0; x < 6; ++x) q[x] = {x != g.unit() && g.mul(x, x) == g.unit() ? 1 : 0};
  return abelian_pullback(g, 2, q);
}

RibbonTuple q8_abelianization_tuple() {
  FiniteGroup g = quaternion_group();
  const std::vector<std::vector<int>> unit_image{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<std::vector<int>> q(8);
  for (int x = 0; x < 8; ++x) q[x] = unit_image[x / 2];
  return abelian_pullback(g, 2, q);
}

std::vector<NamedDiagram> fixture_diagrams() {
  Seed s{1, 1, false};
  std::vector<NamedDiagram> out;
  Diagram unknot;
  unknot.events = {Event::cup(0, 1, s), Event::cap(0, 1)};
  out.push_back({"unknot", unknot});
  Diagram hopf;
  hopf.events = {Event::cup(0, 1, s),  Event::cup(2, -1, s), Event::cross(1, 1),
                 Event::cross(1, 1),   Event::cap(2, -1),    Event::cap(0, 1)};
  out.push_back({"hopf", hopf});
  // Closure of the 2-strand braid with three positive crossings.
  Diagram trefoil;
  trefoil.events = {Event::cup(0, 1, s),  Event::cup(1, 1, s),  Event::cross(0, 1), Event::cross(0, 1),
                    Event::cross(0, 1),   Event::cap(1, 1),     Event::cap(0, 1)};
  out.push_back({"trefoil", trefoil});
  return out;
}

ThinCategory fixture_surgery_category() {
  ThinCategory c = pointlike_category(cyclic_bicharacter_tuple(3));
  c.name = "cat_z3";
  return c;
}

HopfFile k_z2_hopf_file() {
  HopfFile f;
  f.hopf = group_algebra(FiniteGroup::cyclic(2));
  f.hopf.name = "K[Z/2]";
  f.R = z2_r_matrix();
  f.v = {CycloNum(0), CycloNum(1)};
  return f;
}

HopfFile h4_hopf_file() {
  HopfFile f;
  f.hopf = sweedler_h4();
  f.R = sweedler_r_matrix(1);
  return f;
}

std::vector<CategoryFile> fixture_categories() {
  std::vector<CategoryFile> out;
  out.push_back({"ones", RibbonTuple::ones(FiniteGroup::cyclic(2), 1), 1});
  for (int n = 1; n <= 6; ++n) out.push_back({"cat_z" + std::to_string(n), cyclic_bicharacter_tuple(n), 1});
  {
    FiniteGroup g = FiniteGroup::product({2, 2});
    std::vector<std::vector<int>> q;
    for (int x = 0; x < 4; ++x) q.push_back(g.digits(x));
    out.push_back({"cat_z2x2", abelian_pullback(g, 2, q), 1});
  }
  out.push_back({"cat_s3", s3_abelianization_tuple(), 1});
  out.push_back({"cat_q8", q8_abelianization_tuple(), 1});
  out.push_back({"cat_z3_negative_d", cyclic_bicharacter_tuple(3), -1});
  return out;
}

std::vector<SurgeryFile> fixture_surgeries() {
  ThinCategory c = fixture_surgery_category();
  std::vector<SurgeryPresentation> ps{
      builtin_presentation("S3", c),          builtin_presentation("S1xS2", c, 0),
      builtin_presentation("S1xS2", c, 1),    builtin_presentation("lens", c, 1, 3),
      builtin_presentation("lens", c, 0, -1), hopf_link_surgery(c)};
  std::vector<std::string> names{"s3", "s1xs2_0", "s1xs2_1", "lens31", "lens_m1", "hopf00"};
  std::vector<SurgeryFile> out;
  for (size_t k = 0; k < ps.size(); ++k) {
    ps[k].name = names[k];
    out.push_back(surgery_file(ps[k], c.group));
  }
  return out;
}

std::vector<FixtureFile> fixture_corpus() {
  std::vector<FixtureFile> out;
  for (const auto& f : fixture_categories()) out.push_back({f.name + ".toml", "category", write_category_toml(f)});
  for (const auto& d : fixture_diagrams())
    out.push_back({d.name + ".diagram.json", "diagram", write_diagram_json(d.diagram)});
  for (const auto& s : fixture_surgeries())
    out.push_back({s.presentation.name + ".surgery.json", "surgery", write_surgery_json(s)});
  out.push_back({"k_z2.hopf.json", "hopf", write_hopf_json(k_z2_hopf_file())});
  out.push_back({"h4.hopf.json", "hopf", write_hopf_json(h4_hopf_file())});
  return out;
}

std::vector<std::string> write_fixtures(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> names;
  for (const auto& f : fixture_corpus()) {
    write_file((std::filesystem::path(dir) / f.file).string(), f.text);
    names.push_back(f.file);
  }
  return names;
}

}  // namespace pitop
