// Acceptance harness: one PASS/FAIL line per criterion. All value checks are exact;
// the only numeric thresholds are pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "pitop/constructions.hpp"
#include "pitop/fixtures.hpp"
#include "pitop/hqft2d.hpp"
#include "pitop/moves.hpp"
#include "pitop/surgery.hpp"

using namespace pitop;

namespace {

constexpr double kS3RuntimeSeconds = 1.0;
constexpr int kKirbyPairsPerCategory = 200;
constexpr int kKirbyMaxMoves = 5;
constexpr int kReidemeisterMoves = 1000;
constexpr int kMutations = 1000;
constexpr double kMutationDetectionRate = 0.99;

struct Corpus {
  std::vector<ThinCategory> cats;
};

Corpus corpus() {
  Corpus c;
  for (const auto& f : fixture_categories()) {
    if (f.name == "cat_z3_negative_d") continue;  // same category, other D sign
    c.cats.push_back(category_of(f));
  }
  return c;
}

std::vector<SurgeryPresentation> builtins(const ThinCategory& c) {
  const FiniteGroup& g = c.group;
  std::vector<SurgeryPresentation> out{builtin_presentation("S3", c)};
  for (int a = 0; a < g.order(); ++a) {
    out.push_back(builtin_presentation("S1xS2", c, a));
    int k = g.element_order(a);
    for (int p : {k, -k}) out.push_back(builtin_presentation("lens", c, a, p));
  }
  return out;
}

struct Line {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void emit(int n, const std::string& title, const std::function<Line()>& body) {
  Line l;
  try {
    l = body();
  } catch (const std::exception& e) {
    l = {false, std::string("exception: ") + e.what()};
  }
  if (!l.ok) ++failures;
  std::printf("%s %2d. %s: %s\n", l.ok ? "PASS" : "FAIL", n, title.c_str(), l.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  Corpus C = corpus();

  emit(1, "invariant of the 3-sphere is 1/D", [&] {
    auto t0 = std::chrono::steady_clock::now();
    long checked = 0;
    bool ok = true;
    for (const auto& c : C.cats)
      for (int s : {1, -1}) {
        ModularData md = modular_data(c, s);
        ok = ok && tau(builtin_presentation("S3", c), c, md).value == md.D.inv();
        ++checked;
      }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs < kS3RuntimeSeconds;
    return Line{ok, std::to_string(checked) + " category/sign pairs, " + std::to_string(secs) + " s (limit " +
                        std::to_string(kS3RuntimeSeconds) + " s)"};
  });

  emit(2, "S1xS2 invariant is 1 and component weights equal D^2", [&] {
    long checked = 0;
    bool ok = true;
    for (const auto& c : C.cats) {
      ModularData md = modular_data(c, 1);
      for (int a = 0; a < c.group.order(); ++a) {
        ok = ok && tau(builtin_presentation("S1xS2", c, a), c, md).value == CycloNum(1);
        ok = ok && component_weight(c, a) == md.D2;
        ++checked;
      }
    }
    return Line{ok, std::to_string(checked) + " (category, label) pairs, exact"};
  });

  emit(3, "Kirby invariance with the Fenn-Rourke local identity", [&] {
    std::mt19937_64 rng(20261018);
    long pairs = 0, fr = 0;
    bool ok = true;
    std::string bad;
    for (const auto& c : C.cats) {
      ModularData md = modular_data(c, 1);
      auto ps = builtins(c);
      for (int k = 0; k < kKirbyPairsPerCategory; ++k) {
        const auto& p = ps[std::uniform_int_distribution<size_t>(0, ps.size() - 1)(rng)];
        int moves = std::uniform_int_distribution<int>(1, kKirbyMaxMoves)(rng);
        KirbyRun run = kirby_random(p, c, md, moves, rng);
        if (!run.report.ok() && bad.empty()) bad = c.name + " " + p.name;
        ok = ok && run.report.ok();
        if (const Check* ch = run.report.find("Fenn-Rourke local identity")) fr += ch->tested;
        ++pairs;
      }
    }
    return Line{ok, std::to_string(pairs) + " pairs over " + std::to_string(C.cats.size()) + " categories, " +
                        std::to_string(fr) + " Fenn-Rourke applications" + (bad.empty() ? "" : ", first failure " + bad)};
  });

  emit(4, "Reidemeister invariance, Yang-Baxter and twist identities", [&] {
    std::mt19937_64 rng(4);
    ThinCategory z3 = fixture_surgery_category();
    long moves = 0;
    bool ok = true;
    while (moves < kReidemeisterMoves) {
      for (const auto& nd : fixture_diagrams()) {
        Diagram d = nd.diagram;
        CycloNum f0 = evaluate_F(d, z3);
        for (int k = 0; k < 25; ++k, ++moves) {
          d = random_move(d, z3, rng).result;
          ok = ok && evaluate_F(d, z3) == f0;
        }
      }
    }
    for (const auto& c : C.cats) ok = ok && crossed_invariance_suite(c).ok();
    return Line{ok, std::to_string(moves) + " random moves on the fixture diagrams; scalar identities on " +
                        std::to_string(C.cats.size()) + " categories"};
  });

  emit(5, "connected-sum law", [&] {
    long pairs = 0;
    bool ok = true;
    for (const auto& c : C.cats) {
      ModularData md = modular_data(c, 1);
      auto ps = builtins(c);
      std::vector<CycloNum> t;
      for (const auto& p : ps) t.push_back(tau(p, c, md).value);
      for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = 0; j < ps.size(); ++j, ++pairs)
          ok = ok && tau(connected_sum(ps[i], ps[j]), c, md).value == md.D * t[i] * t[j];
    }
    return Line{ok, std::to_string(pairs) + " ordered pairs of built-in manifolds, exact"};
  });

  emit(6, "canonical twists from sign characters", [&] {
    long tuples = 0, twists = 0;
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
      FiniteGroup g = FiniteGroup::cyclic(n);
      long N = std::lcm(n, 2);
      auto chis = sign_characters(g);
      for (const auto& t : enumerate_bicharacter_tuples(g, N)) {
        ++tuples;
        std::vector<std::vector<CycloNum>> ths;
        for (const auto& chi : chis) {
          RibbonTuple u = t;
          u.theta = canonical_twist(t, chi);
          u.has_theta = true;
          ok = ok && verify_twist(u).ok();
          ths.push_back(u.theta);
          ++twists;
        }
        for (const auto& a : ths)
          for (const auto& b : ths) ok = ok && twist_ratio_is_sign_character(g, a, b);
      }
    }
    return Line{ok, std::to_string(tuples) + " tuples, " + std::to_string(twists) + " twists, exhaustive"};
  });

  emit(7, "crossed algebra of colors and mutation detection", [&] {
    bool ok = true;
    for (const auto& c : C.cats) ok = ok && verify_crossed_algebra(crossed_algebra(c)).ok();
    std::mt19937_64 rng(7);
    long detected = 0, counted = 0, rescalings = 0;
    for (long k = 0; counted < kMutations; ++k) {
      const ThinCategory& c = C.cats[k % C.cats.size()];
      CrossedAlgebra a = crossed_algebra(c);
      Mutation m = mutate(a, rng);
      // On a one-dimensional algebra a changed pairing entry is a nonzero rescaling of a valid form.
      if (m.target == MutationTarget::Pairing && a.dim() == 1) {
        ++rescalings;
        continue;
      }
      ++counted;
      if (!verify_crossed_algebra(a).ok()) ++detected;
    }
    double rate = static_cast<double>(detected) / kMutations;
    ok = ok && rate >= kMutationDetectionRate;
    return Line{ok, std::to_string(detected) + "/" + std::to_string(kMutations) + " mutations detected (threshold " +
                        std::to_string(kMutationDetectionRate) + "), " + std::to_string(rescalings) +
                        " one-dimensional pairing rescalings skipped"};
  });

  emit(8, "torus block dimensions equal fixed-point counts", [&] {
    std::vector<ThinCategory> cats = C.cats;
    for (int n : {2, 3}) {
      ThinCategory base = pointlike_category(cyclic_bicharacter_tuple(n));
      CharacterGroup aut = aut0_pointlike(base);
      std::vector<int> all;
      for (int k = 0; k < aut.group.order(); ++k) all.push_back(k);
      cats.push_back(canonical_extension(base, aut, all).cat);
    }
    long checked = 0;
    bool ok = true;
    for (const auto& c : cats) {
      int G = c.group.order();
      for (int a = 0; a < G; ++a)
        for (int b = 0; b < G; ++b) {
          if (c.group.mul(a, b) != c.group.mul(b, a)) continue;
          long brute = 0;
          for (int s = 0; s < c.size(); ++s)
            if (c.grade[s] == a && c.Act(b, s) == s) ++brute;
          SurfaceSpec torus{{}, {a}, {b}};
          ok = ok && block_dimension(c, torus) == brute && torus_fixed_points(c, a, b) == brute;
          for (int s = 0; s < c.size(); ++s) {
            auto counts = torus_mark_counts(c, 1, s, a, b);
            for (long x : counts) ok = ok && x == counts[0];
          }
          ++checked;
        }
    }
    return Line{ok, std::to_string(checked) + " commuting pairs over " + std::to_string(cats.size()) +
                        " categories, including 2 canonical extensions"};
  });

  emit(9, "Hopf pi-coalgebras, ribbon structure and mirror", [&] {
    bool ok = true;
    long reports = 0;
    auto need = [&](const Report& r) {
      ok = ok && r.ok();
      ++reports;
    };
    HopfFile kz2 = k_z2_hopf_file();
    HopfFile h4 = h4_hopf_file();
    for (const HopfFile* f : {&kz2, &h4}) {
      const HopfAlgebraData& h = f->hopf;
      need(verify_hopf(h));
      GroupLikes gl = group_likes(h);
      auto act = conjugation_action(h, gl);
      PiCoalgebra plain = build_A_pi(h, gl.group, act, ApiVariant::Plain);
      PiCoalgebra bar = build_A_pi(h, gl.group, act, ApiVariant::Bar);
      for (const PiCoalgebra* a : {&plain, &bar}) {
        need(verify_pi_coalgebra(*a));
        need(verify_crossed(*a));
        ok = ok && mirror_coalgebra(mirror_coalgebra(*a)) == *a;
      }
      ok = ok && mirror_coalgebra(plain) == bar && mirror_coalgebra(bar) == plain;
    }
    for (ApiVariant v : {ApiVariant::Plain, ApiVariant::Bar}) {
      RibbonPiCoalgebra rb = build_R_theta_from_ribbon(kz2.hopf, kz2.R, kz2.v, v);
      need(verify_quasitriangular(rb.A, rb.family));
      need(verify_ribbon(rb.A, rb.family));
      ok = ok && mirror_family(mirror_coalgebra(rb.A), mirror_family(rb.A, rb.family)) == rb.family;
    }
    return Line{ok, std::to_string(reports) + " verifier reports on K[Z/2] and H4; mirror checked as an involution"};
  });

  emit(10, "transfer, canonical extension and mirror involution", [&] {
    ThinCategory triv = pointlike_category(RibbonTuple::ones(FiniteGroup(), 1));
    TransferResult tr = transfer(triv, FiniteGroup::cyclic(2), {0});
    bool ok = tr.unit_rank == 2;
    std::string detail = "End(1) rank " + std::to_string(tr.unit_rank);
    ThinCategory base = pointlike_category(cyclic_bicharacter_tuple(3));
    CharacterGroup aut = aut0_pointlike(base);
    std::vector<int> all;
    for (int k = 0; k < aut.group.order(); ++k) all.push_back(k);
    ExtensionResult ext = canonical_extension(base, aut, all);
    ext.cat.order = std::lcm(ext.cat.order, 12L);
    ModularData md = modular_data(ext.cat, 1);
    ok = ok && ext.report.ok() && md.report.ok();
    detail += "; extension of Z/3 over Q(zeta_" + std::to_string(ext.cat.order) + ") has D = " + md.D.str();
    long mirrored = 0;
    for (const auto& f : fixture_categories()) {
      ok = ok && tuple_mirror(tuple_mirror(f.tuple)) == f.tuple;
      if (f.tuple.has_theta) {
        ThinCategory c = category_of(f);
        ok = ok && mirror_category(mirror_category(c)) == c;
      }
      ++mirrored;
    }
    detail += "; " + std::to_string(mirrored) + " tuples and categories mirrored twice";
    return Line{ok, detail};
  });

  return failures == 0 ? 0 : 1;
}
