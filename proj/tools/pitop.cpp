// Command-line front end: one subcommand per module operation, exit status 0 iff every
// check passes, 1 when a check fails, 2 on usage, parse or domain errors.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pitop/constructions.hpp"
#include "pitop/fixtures.hpp"
#include "pitop/hqft2d.hpp"
#include "pitop/io.hpp"
#include "pitop/surgery.hpp"

using namespace pitop;

namespace {

struct Globals {
  long cyclotomic_order = 0;
  std::string dsign;
  unsigned long seed = 1;
  std::string json_report;
};

/// Collected output of one command.
struct RunReport {
  std::string command;
  std::vector<std::string> inputs;
  std::string category;
  std::vector<std::pair<std::string, std::string>> results;
  Report checks{"checks"};
  unsigned long seed = 0;

  void result(const std::string& k, const std::string& v) { results.emplace_back(k, v); }
  void result(const std::string& k, const CycloNum& v) { results.emplace_back(k, v.str()); }
  void result(const std::string& k, long v) { results.emplace_back(k, std::to_string(v)); }

  nlohmann::ordered_json json(double ms) const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["category"] = category;
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (const auto& [k, v] : results) r[k] = v;
    j["results"] = r;
    j["checks"] = checks.to_json();
    j["ok"] = checks.ok();
    j["seed"] = seed;
    j["milliseconds"] = ms;
    return j;
  }
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

struct LoadedCategory {
  CategoryFile file;
  ThinCategory cat;
  int dsign = 1;
};

LoadedCategory load_category(const std::string& path, const Globals& g) {
  LoadedCategory out;
  out.file = load_category_file(path);
  if (g.cyclotomic_order > 0) {
    if (g.cyclotomic_order % out.file.tuple.order != 0)
      throw DomainError("--cyclotomic-order must be a multiple of the file's order " +
                        std::to_string(out.file.tuple.order));
    out.file.tuple.order = g.cyclotomic_order;
  }
  out.dsign = out.file.dsign;
  if (!g.dsign.empty()) out.dsign = g.dsign == "-" || g.dsign == "-1" ? -1 : 1;
  if (out.file.tuple.has_theta) out.cat = category_of(out.file);
  if (out.cat.name.empty()) out.cat.name = path;
  return out;
}

void print_matrix(std::ostream& os, const Matrix& m) {
  for (const auto& row : m) {
    os << "  ";
    for (size_t j = 0; j < row.size(); ++j) os << (j ? "  " : "") << row[j];
    os << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy quantum field theory toolkit: pointlike crossed categories, link and 3-manifold "
               "invariants, crossed algebras and Hopf pi-coalgebras"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--cyclotomic-order", g.cyclotomic_order, "Work over Q(zeta_N) for this N");
  app.add_option("--dsign", g.dsign, "Sign of the rank D: + or -")->check(CLI::IsMember({"+", "-", "1", "-1"}));
  app.add_option("--seed", g.seed, "Seed for randomized commands");
  app.add_option("--json-report", g.json_report, "Write the run report as JSON to this path ('-' for stdout)");

  RunReport run;
  std::string file1, file2, variant = "plain", alphas, betas, embedding, subgroup, group_spec, reps, dir = "fixtures";
  std::vector<std::string> marks;
  int moves = 5;
  bool tau_prime = false;

  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&run, name] { run.command = name; });
    return s;
  };

  CLI::App* c1 = sub("verify-cocycle", "Verify the associator, braiding and twist identities of a tuple");
  c1->add_option("tuple", file1)->required();
  CLI::App* c2 = sub("verify-category", "Verify a pointlike category and its derived structures");
  c2->add_option("category", file1)->required();
  CLI::App* c3 = sub("eval-link", "Evaluate a labelled link diagram");
  c3->add_option("category", file1)->required();
  c3->add_option("diagram", file2)->required();
  CLI::App* c4 = sub("tau", "Invariant of a surgery presentation");
  c4->add_option("category", file1)->required();
  c4->add_option("surgery", file2)->required();
  c4->add_flag("--tau-prime", tau_prime, "Also print the renormalized invariant");
  CLI::App* c5 = sub("kirby-test", "Random Kirby moves; the invariant must not change");
  c5->add_option("category", file1)->required();
  c5->add_option("surgery", file2)->required();
  c5->add_option("--moves", moves, "Number of moves")->check(CLI::NonNegativeNumber);
  CLI::App* c6 = sub("verlinde", "Algebra of colors and modular data");
  c6->add_option("category", file1)->required();
  CLI::App* c7 = sub("verify-crossed-algebra", "Crossed algebra of classes of simples");
  c7->add_option("category", file1)->required();
  CLI::App* c8 = sub("blocks", "Dimension of the block space of a marked surface");
  c8->add_option("category", file1)->required();
  c8->add_option("--alphas", alphas, "Comma-separated alpha labels, one per handle");
  c8->add_option("--betas", betas, "Comma-separated beta labels, one per handle");
  c8->add_option("--mark", marks, "Mark as eps:label:color (repeatable)");
  CLI::App* c9 = sub("transfer", "Transfer a category to a larger group");
  c9->add_option("category", file1)->required();
  c9->add_option("--group", group_spec, "Target group, e.g. cyclic:4 or product:2x2")->required();
  c9->add_option("--embedding", embedding, "Images of the source group elements")->required();
  c9->add_option("--reps", reps, "Coset representatives");
  CLI::App* c10 = sub("extend", "Canonical extension of a pointlike category by characters");
  c10->add_option("category", file1)->required();
  c10->add_option("--subgroup", subgroup, "Character indices (default: all)");
  CLI::App* c11 = sub("hopf-verify", "Hopf algebra axioms, and the R-matrix and ribbon element when present");
  c11->add_option("hopf", file1)->required();
  CLI::App* c12 = sub("hopf-build", "Hopf pi-coalgebra over the group-likes");
  c12->add_option("hopf", file1)->required();
  c12->add_option("--variant", variant)->check(CLI::IsMember({"plain", "bar"}));
  CLI::App* c13 = sub("hopf-mirror", "Mirror of the Hopf pi-coalgebra over the group-likes");
  c13->add_option("hopf", file1)->required();
  c13->add_option("--variant", variant)->check(CLI::IsMember({"plain", "bar"}));
  CLI::App* c14 = sub("fixtures", "Write the fixture corpus");
  c14->add_option("dir", dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  run.seed = g.seed;
  std::ostream& out = std::cout;
  try {
    const std::string& cmd = run.command;
    if (!file1.empty()) run.inputs.push_back(file1);
    if (!file2.empty()) run.inputs.push_back(file2);

    if (cmd == "verify-cocycle") {
      CategoryFile f = load_category_file(file1);
      run.checks.merge(verify_tuple(f.tuple));
    } else if (cmd == "fixtures") {
      auto names = write_fixtures(dir);
      run.result("count", static_cast<long>(names.size()));
      run.checks.record("fixture count at least 20", names.size() >= 20);
      for (const auto& n : names) out << dir << "/" << n << "\n";
    } else if (cmd.rfind("hopf-", 0) == 0) {
      HopfFile hf = parse_hopf_json(read_file(file1), file1);
      const HopfAlgebraData& h = hf.hopf;
      run.category = h.name;
      ApiVariant var = variant == "bar" ? ApiVariant::Bar : ApiVariant::Plain;
      if (cmd == "hopf-verify") {
        run.checks.merge(verify_hopf(h));
        if (!hf.R.empty()) run.checks.merge(verify_quasitriangular(as_pi_coalgebra(h), RibbonFamily{{hf.R}, {}}));
        if (!hf.R.empty() && !hf.v.empty()) run.checks.merge(verify_ribbon_hopf(h, hf.R, hf.v));
      } else {
        GroupLikes gl = group_likes(h);
        run.result("group-likes", static_cast<long>(gl.group.order()));
        bool ribbon = !hf.R.empty() && !hf.v.empty();
        RibbonPiCoalgebra rb;
        if (ribbon) rb = build_R_theta_from_ribbon(h, hf.R, hf.v, var);
        else rb.A = build_A_pi(h, gl.group, conjugation_action(h, gl), var);
        if (cmd == "hopf-build") {
          run.checks.merge(verify_pi_coalgebra(rb.A));
          run.checks.merge(verify_crossed(rb.A));
          if (ribbon) {
            run.checks.merge(verify_quasitriangular(rb.A, rb.family));
            run.checks.merge(verify_ribbon(rb.A, rb.family));
          }
        } else {
          PiCoalgebra m = mirror_coalgebra(rb.A);
          run.checks.merge(verify_pi_coalgebra(m));
          run.checks.merge(verify_crossed(m));
          run.checks.record("mirror is an involution", mirror_coalgebra(m) == rb.A);
          RibbonPiCoalgebra other;
          ApiVariant ov = var == ApiVariant::Plain ? ApiVariant::Bar : ApiVariant::Plain;
          other.A = build_A_pi(h, gl.group, conjugation_action(h, gl), ov);
          run.checks.record("mirror exchanges the plain and bar variants", m == other.A);
          if (ribbon) {
            RibbonFamily mf = mirror_family(rb.A, rb.family);
            run.checks.merge(verify_quasitriangular(m, mf));
            run.checks.merge(verify_ribbon(m, mf));
            run.checks.record("mirror of the ribbon family is an involution", mirror_family(m, mf) == rb.family);
          }
        }
      }
    } else {
      LoadedCategory lc = load_category(file1, g);
      const ThinCategory& c = lc.cat;
      run.category = c.name;
      if (!lc.file.tuple.has_theta) throw DomainError("the category file has no twist table");
      if (cmd == "verify-category") {
        run.checks.merge(verify_tuple(lc.file.tuple));
        run.checks.merge(validate_structure(c));
        run.checks.merge(crossed_invariance_suite(c));
        run.checks.merge(verify_color_algebra(verlinde_algebra(c)));
        run.checks.merge(verify_canonical_colors(c));
        ModularData md = modular_data(c, lc.dsign);
        run.checks.merge(md.report);
        run.result("simples", static_cast<long>(c.size()));
        run.result("D", md.D);
      } else if (cmd == "eval-link") {
        Diagram d = parse_diagram_json(read_file(file2), file2);
        Report rep = validate_labeling(d, c);
        run.checks.merge(rep);
        if (rep.ok()) run.result("F", evaluate_F(d, c));
      } else if (cmd == "tau" || cmd == "kirby-test") {
        SurgeryFile sf = parse_surgery_json(read_file(file2), file2);
        run.checks.merge(check_surgery_file(sf, c.group));
        ModularData md = modular_data(c, lc.dsign);
        TauResult t = tau(sf.presentation, c, md);
        run.result("tau", t.value);
        if (tau_prime) run.result("tau'", t.tau_prime);
        run.result("sigma", static_cast<long>(t.sigma));
        run.result("b1", static_cast<long>(t.b1));
        run.result("D", t.D);
        if (cmd == "kirby-test") {
          std::mt19937_64 rng(g.seed);
          KirbyRun kr = kirby_random(sf.presentation, c, md, moves, rng);
          for (const auto& s : kr.steps) out << "  " << s.move << " -> tau " << s.tau << "\n";
          run.checks.merge(kr.report);
          run.result("moves", static_cast<long>(kr.steps.size()));
        }
      } else if (cmd == "verlinde") {
        ColorAlgebra ca = verlinde_algebra(c);
        run.checks.merge(verify_color_algebra(ca));
        run.checks.merge(verify_canonical_colors(c));
        ModularData md = modular_data(c, lc.dsign);
        run.checks.merge(md.report);
        out << "S =\n";
        print_matrix(out, md.S);
        run.result("D", md.D);
        run.result("D^2", md.D2);
        run.result("Delta+", md.delta_plus);
        run.result("Delta-", md.delta_minus);
      } else if (cmd == "verify-crossed-algebra") {
        run.checks.merge(verify_crossed_algebra(crossed_algebra(c)));
        for (int a = 0; a < c.group.order(); ++a) run.checks.merge(verify_splitting(c, a));
        run.result("dimension", static_cast<long>(c.size()));
      } else if (cmd == "blocks") {
        SurfaceSpec s;
        s.alphas = parse_ints(alphas);
        s.betas = parse_ints(betas);
        if (s.alphas.size() != s.betas.size()) throw DomainError("--alphas and --betas need the same length");
        for (const auto& m : marks) {
          std::string spec = m;
          std::replace(spec.begin(), spec.end(), ':', ',');
          auto v = parse_ints(spec);
          if (v.size() != 3) throw DomainError("mark must be eps:label:color");
          s.marks.push_back({v[0], v[1], v[2]});
        }
        long dim = block_dimension(c, s);
        run.result("dimension", dim);
        if (s.genus() == 1 && s.marks.empty()) {
          long fixed = torus_fixed_points(c, s.alphas[0], s.betas[0]);
          run.result("fixed points", fixed);
          run.checks.record("torus dimension equals the fixed-point count", dim == fixed);
        }
        if (s.genus() == 1 && s.marks.size() == 1) {
          auto counts = torus_mark_counts(c, s.marks[0].eps, s.marks[0].color, s.alphas[0], s.betas[0]);
          bool same = std::equal(counts.begin() + 1, counts.end(), counts.begin());
          run.checks.record("marked torus counts agree", same);
        }
      } else if (cmd == "transfer") {
        FiniteGroup pi = FiniteGroup::parse(group_spec);
        TransferResult tr = transfer(c, pi, parse_ints(embedding), parse_ints(reps));
        run.checks.merge(tr.report);
        run.checks.merge(validate_structure(tr.cat));
        run.result("simples", static_cast<long>(tr.cat.size()));
        run.result("End(1) rank", static_cast<long>(tr.unit_rank));
        run.result("index", static_cast<long>(pi.order() / c.group.order()));
      } else if (cmd == "extend") {
        CharacterGroup aut = aut0_pointlike(c);
        std::vector<int> sg = parse_ints(subgroup);
        if (sg.empty())
          for (int k = 0; k < aut.group.order(); ++k) sg.push_back(k);
        run.checks.merge(aut0_preserves_structure(c, aut));
        ExtensionResult ext = canonical_extension(c, aut, sg);
        if (g.cyclotomic_order > 0) ext.cat.order = std::lcm(ext.cat.order, g.cyclotomic_order);
        run.checks.merge(ext.report);
        run.checks.merge(validate_structure(ext.cat));
        ModularData md = modular_data(ext.cat, lc.dsign);
        run.checks.merge(md.report);
        run.result("simples", static_cast<long>(ext.cat.size()));
        run.result("D", md.D);
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  for (const auto& [k, v] : run.results) out << k << " = " << v << "\n";
  out << run.checks.str();
  out << (run.checks.ok() ? "PASS" : "FAIL") << "\n";
  if (!g.json_report.empty()) {
    std::string text = run.json(ms).dump(2) + "\n";
    if (g.json_report == "-") out << text;
    else write_file(g.json_report, text);
  }
  return run.checks.ok() ? 0 : 1;
}
