#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "schubert/classification.hpp"
#include "schubert/enumeration.hpp"
#include "schubert/equations.hpp"
#include "schubert/error.hpp"
#include "schubert/finite_field.hpp"
#include "schubert/json_io.hpp"
#include "schubert/linking_graph.hpp"
#include "schubert/pillar_set.hpp"
#include "schubert/rank_matrix.hpp"
#include "schubert/rothe.hpp"
#include "schubert/transposition.hpp"

using namespace schubert;
using nlohmann::json;

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceLimit = 3;
constexpr int kExitMismatch = 4;

struct Globals {
  std::string format = "text";
  std::string cache;
  int jobs = 0;
  std::uint64_t budget = kDefaultPointBudget;

  Format fmt() const { return parse_format(format); }
  bool as_json() const { return fmt() == Format::Json; }
  ClassifyOptions classify_options() const { return {jobs, 8}; }

  Classification classification(int n) const {
    std::filesystem::path path;
    if (!cache.empty()) {
      std::filesystem::create_directories(cache);
      path = std::filesystem::path(cache) / ("classes-n" + std::to_string(n) + ".json");
    }
    return classify_cached(n, path, classify_options());
  }
};

std::string pillar_text(const PillarEntry& p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")=" + std::to_string(p.value);
}

std::string join(const std::vector<PillarEntry>& entries) {
  std::string out;
  for (const auto& p : entries) out += (out.empty() ? "" : " ") + pillar_text(p);
  return out.empty() ? "(none)" : out;
}

std::string join(const std::vector<Permutation>& perms) {
  std::string out;
  for (const auto& w : perms) out += (out.empty() ? "" : " ") + w.to_string();
  return out;
}

json to_json(const std::vector<Permutation>& perms) {
  json out = json::array();
  for (const auto& w : perms) out.push_back(w.to_string());
  return out;
}

json classes_json(const LinkingGraph& g) {
  json out = json::array();
  for (std::size_t t = 0; t < g.components.size(); ++t) {
    std::vector<PillarEntry> members;
    for (int v : g.components[t]) members.push_back(g.vertices[static_cast<std::size_t>(v)]);
    out.push_back({{"interval", {g.intervals[t].first, g.intervals[t].second}}, {"pillars", to_json(members)}});
  }
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

Scope parse_scope(const std::string& s) {
  if (s == "pillar") return Scope::Pillar;
  if (s == "all") return Scope::All;
  throw ParseError("unknown scope '" + s + "' (expected pillar or all)");
}

Semantics parse_semantics(const std::string& s) {
  if (s == "cell") return Semantics::Cell;
  if (s == "variety") return Semantics::Variety;
  throw ParseError("unknown semantics '" + s + "' (expected cell or variety)");
}

int cmd_rank(const Globals& g, const std::string& text) {
  const Permutation w = Permutation::parse(text);
  const RankMatrix r = rank_matrix(w);
  if (g.as_json()) {
    print_json({{"permutation", to_json(w)},
                {"rank_matrix", to_json(r)},
                {"pillars", to_json(pillar_entries(w))},
                {"essential", to_json(essential_entries(w))}});
  } else {
    std::cout << render(r);
  }
  return 0;
}

int cmd_pillars(const Globals& g, const std::string& text) {
  const Permutation w = Permutation::parse(text);
  const LinkingGraph lg = linking_graph(w);
  if (g.as_json()) {
    print_json({{"permutation", to_json(w)}, {"pillars", to_json(lg.vertices)}, {"classes", classes_json(lg)}});
    return 0;
  }
  std::cout << "pillars: " << join(lg.vertices) << '\n';
  for (std::size_t t = 0; t < lg.components.size(); ++t) {
    std::vector<PillarEntry> members;
    for (int v : lg.components[t]) members.push_back(lg.vertices[static_cast<std::size_t>(v)]);
    std::cout << "L" << t + 1 << " [" << lg.intervals[t].first << "," << lg.intervals[t].second
              << "]: " << join(members) << '\n';
  }
  return 0;
}

int cmd_essential(const Globals& g, const std::string& text) {
  const Permutation w = Permutation::parse(text);
  const auto e = essential_entries(w);
  if (g.as_json())
    print_json({{"permutation", to_json(w)}, {"essential", to_json(e)}});
  else
    std::cout << "essential: " << join(e) << '\n';
  return 0;
}

int cmd_rothe(const Globals& g, const std::string& text, bool opposite) {
  const Permutation w = Permutation::parse(text);
  const RotheDiagram d(w, opposite ? RotheFlavor::Opposite : RotheFlavor::Standard);
  if (g.as_json()) {
    print_json({{"permutation", to_json(w)},
                {"flavor", opposite ? "opposite" : "standard"},
                {"white_cells", d.white_count()},
                {"frontier", to_json(d.frontier_cells())}});
  } else {
    std::cout << d.render() << "white cells: " << d.white_count() << '\n';
  }
  return 0;
}

int cmd_reconstruct(const Globals& g, const std::string& text, bool trace) {
  const PillarSet ps = PillarSet::parse(text);
  const Reconstruction rec = reconstruct_with_trace(ps);
  if (g.as_json()) {
    json steps = json::array();
    for (const auto& s : rec.steps) {
      json dots = json::array();
      for (auto [row, col] : s.dots) dots.push_back({row, col});
      steps.push_back({{"pillar", s.pillar}, {"already_inside", s.already_inside}, {"dots", dots}});
    }
    print_json({{"permutation", to_json(rec.permutation)}, {"increments", rec.increments}, {"steps", steps}});
    return 0;
  }
  std::cout << rec.permutation.to_string() << '\n';
  if (trace) {
    for (const auto& s : rec.steps) {
      std::cout << (s.pillar < 0 ? std::string("fill")
                                 : pillar_text(ps.pillars()[static_cast<std::size_t>(s.pillar)]))
                << ": inside " << s.already_inside << ", dots";
      for (auto [row, col] : s.dots) std::cout << " (" << row << "," << col << ")";
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_codim(const Globals& g, const std::string& text) {
  const Permutation w = Permutation::parse(text);
  const PillarSet ps = PillarSet::of(w);
  const Reconstruction rec = reconstruct_with_trace(ps);
  const int from_pillars = codim_from_pillars(ps);
  if (g.as_json()) {
    print_json({{"permutation", to_json(w)},
                {"length", w.length()},
                {"codim", w.colength()},
                {"codim_from_pillars", from_pillars},
                {"increments", rec.increments}});
  } else {
    std::cout << "length " << w.length() << ", codim " << w.colength() << ", from pillars " << from_pillars << '\n';
  }
  return from_pillars == w.colength() ? 0 : kExitMismatch;
}

int cmd_truncate(const Globals& g, const std::string& text, int t) {
  const Permutation w = Permutation::parse(text);
  const Permutation out = truncate(w, t);
  if (g.as_json())
    print_json({{"permutation", to_json(w)}, {"t", t}, {"truncation", to_json(out)}});
  else
    std::cout << out.to_string() << '\n';
  return 0;
}

int cmd_transpose(const Globals& g, const std::string& text, int t, bool trace) {
  const Permutation w = Permutation::parse(text);
  const ElementaryTrace tr = elementary_partial_transpose_trace(w, t);
  if (g.as_json()) {
    print_json({{"permutation", to_json(w)},
                {"t", t},
                {"result", to_json(tr.result)},
                {"trace", tr.to_string()}});
  } else {
    std::cout << (trace ? tr.to_string() : tr.result.to_string()) << '\n';
  }
  return 0;
}

int cmd_cone_class(const Globals& g, const std::string& text) {
  const Permutation w = Permutation::parse(text);
  const auto cls = cone_class(w);
  if (g.as_json())
    print_json({{"permutation", to_json(w)}, {"size", cls.size()}, {"members", to_json(cls)}});
  else
    std::cout << join(cls) << '\n';
  return 0;
}

std::vector<std::size_t> report_pow2(const Classification& c, std::ostream& out, bool text) {
  const auto bad = non_power_of_two_classes(c);
  if (text) {
    if (bad.empty())
      out << "n=" << c.n << ": all " << c.classes.size() << " class sizes are powers of 2\n";
    for (auto k : bad)
      out << "n=" << c.n << ": class of " << c.classes[k].front().to_string() << " has size " << c.classes[k].size()
          << '\n';
  }
  return bad;
}

json gaps_json(const std::vector<KnownGap>& gaps) {
  json out = json::array();
  for (const auto& gap : gaps)
    out.push_back({{"first", gap.first.to_string()},
                   {"second", gap.second.to_string()},
                   {"length", gap.first.length()},
                   {"transposed", to_json(gap.transposed)}});
  return out;
}

void print_gaps(const std::vector<KnownGap>& gaps) {
  for (const auto& gap : gaps)
    std::cout << gap.first.to_string() << " ~ " << gap.second.to_string() << "  length " << gap.first.length()
              << ", transposed " << join(gap.transposed) << '\n';
  std::cout << gaps.size() << " pair(s) with equal length after a non-admissible transposition\n";
}

int cmd_classify(const Globals& g, int n, bool by_dim, bool pow2, bool gaps) {
  const Classification c = g.classification(n);
  const Format f = g.fmt();
  if (f == Format::Json) {
    json classes = json::array();
    for (const auto& cls : c.classes)
      classes.push_back({{"representative", cls.front().to_string()},
                         {"dimension", Classification::dimension(cls)},
                         {"size", cls.size()},
                         {"members", to_json(cls)}});
    json j = {{"n", n}, {"total", c.classes.size()}, {"classes", classes}};
    if (pow2) {
      json bad = json::array();
      for (auto k : non_power_of_two_classes(c)) bad.push_back(c.classes[k].front().to_string());
      j["non_power_of_two"] = bad;
    }
    if (gaps) j["known_gaps"] = gaps_json(known_gaps(c, g.jobs));
    print_json(j);
    return 0;
  }
  if (f == Format::Csv) {
    std::cout << "dimension,representative,size,members\n";
    for (const auto& cls : c.classes)
      std::cout << Classification::dimension(cls) << ',' << cls.front().to_string() << ',' << cls.size() << ','
                << join(cls) << '\n';
  } else if (by_dim) {
    std::cout << format_table(dimension_table(c), Format::Text);
  } else {
    for (const auto& cls : c.classes)
      std::cout << "dim " << Classification::dimension(cls) << "  size " << cls.size() << "  " << join(cls) << '\n';
    std::cout << "total classes: " << c.classes.size() << '\n';
  }
  if (pow2) report_pow2(c, std::cout, true);
  if (gaps) print_gaps(known_gaps(c, g.jobs));
  return 0;
}

int cmd_tables(const Globals& g, const std::vector<int>& ns) {
  json all = json::array();
  for (int n : ns) {
    const DimensionTable t = dimension_table(g.classification(n));
    const auto [c1_var, c1_cones] = codim1_report(n);
    json checks = {{"codim1_expected", {c1_var, c1_cones}},
                   {"codim1_enumerated", {t.schubert_in_codim(1), t.cones_in_codim(1)}},
                   {"schubert_codim2_formula", schubert_codim2_count(n)},
                   {"schubert_codim2_enumerated", t.schubert_in_codim(2)}};
    if (n >= 4) {
      checks["cones_codim2_formula"] = codim2_count(n);
      checks["cones_codim2_enumerated"] = t.cones_in_codim(2);
    }
    if (g.as_json()) {
      json j = json::parse(format_table(t, Format::Json));
      j["checks"] = checks;
      all.push_back(j);
      continue;
    }
    std::cout << format_table(t, g.fmt());
    if (g.fmt() == Format::Text) {
      std::cout << "codim 1: " << t.schubert_in_codim(1) << " varieties, " << t.cones_in_codim(1)
                << " cones (expected " << c1_var << ", " << c1_cones << ")\n";
      std::cout << "codim 2 varieties: " << t.schubert_in_codim(2) << " (closed form " << schubert_codim2_count(n)
                << ")\n";
      if (n >= 4)
        std::cout << "codim 2 cones: " << t.cones_in_codim(2) << " (closed form " << codim2_count(n) << ")\n";
      std::cout << '\n';
    }
  }
  if (g.as_json()) print_json(all);
  return 0;
}

int cmd_equations(const Globals& g, const std::string& text, const std::string& scope_name) {
  const Permutation w = Permutation::parse(text);
  const MinorSystem sys = minor_system(w, parse_scope(scope_name));
  const bool comma = w.size() >= 10;
  if (g.as_json()) {
    json conds = json::array();
    for (const auto& c : sys.conditions) {
      json gens = json::array();
      for (const auto& p : c.generators) gens.push_back(p.to_string(comma));
      conds.push_back({{"i", c.i}, {"j", c.j}, {"bound", c.bound}, {"generators", gens}});
    }
    json gens = json::array();
    for (const auto& p : sys.generators()) gens.push_back(p.to_string(comma));
    print_json({{"permutation", to_json(w)}, {"scope", to_string(sys.scope)}, {"conditions", conds}, {"generators", gens}});
    return 0;
  }
  for (const auto& c : sys.conditions) {
    std::cout << "rank M" << c.i << c.j << " <= " << c.bound << ": " << c.generators.size() << " minor(s)\n";
  }
  for (const auto& p : sys.generators()) std::cout << p.to_string(comma) << '\n';
  return 0;
}

int cmd_count(const Globals& g, const std::string& text, int q, const std::string& scope, const std::string& sem) {
  const Permutation w = Permutation::parse(text);
  const std::uint64_t count = count_solutions(w, q, parse_scope(scope), parse_semantics(sem), g.budget, g.jobs);
  if (g.as_json())
    print_json({{"permutation", to_json(w)}, {"q", q}, {"scope", scope}, {"semantics", sem}, {"count", count}});
  else
    std::cout << count << '\n';
  return 0;
}

int cmd_verify(const Globals& g, int n, int q, int samples, std::uint64_t seed) {
  std::vector<Permutation> perms = all_permutations(n);
  if (samples > 0 && static_cast<std::size_t>(samples) < perms.size()) {
    std::mt19937_64 rng(seed);
    std::shuffle(perms.begin(), perms.end(), rng);
    perms.erase(perms.begin() + samples, perms.end());
    std::sort(perms.begin(), perms.end());
  }
  json results = json::array();
  int mismatches = 0;
  for (const auto& w : perms) {
    const SweepComparison s = compare_pillar_sufficiency(w, q, g.budget, g.jobs);
    if (!s.identical()) ++mismatches;
    if (g.as_json()) {
      json r = {{"permutation", w.to_string()}, {"points", s.points}, {"pillar_count", s.first_count},
                {"all_count", s.second_count}, {"identical", s.identical()}};
      if (s.first_divergence) r["first_divergence"] = *s.first_divergence;
      results.push_back(r);
    } else if (!s.identical()) {
      std::cout << w.to_string() << ": solution sets differ at point " << *s.first_divergence << '\n';
    }
  }
  if (g.as_json())
    print_json({{"n", n}, {"q", q}, {"checked", perms.size()}, {"mismatches", mismatches}, {"results", results}});
  else
    std::cout << "checked " << perms.size() << " permutation(s) of S_" << n << " over F_" << q << ": "
              << (mismatches == 0 ? "pillar and full systems agree" : std::to_string(mismatches) + " mismatch(es)")
              << '\n';
  return mismatches == 0 ? 0 : kExitMismatch;
}

int cmd_check_pow2(const Globals& g, int n) {
  const Classification c = g.classification(n);
  if (g.as_json()) {
    json bad = json::array();
    for (auto k : non_power_of_two_classes(c))
      bad.push_back({{"representative", c.classes[k].front().to_string()}, {"size", c.classes[k].size()}});
    print_json({{"n", n}, {"classes", c.classes.size()}, {"violations", bad}});
  } else {
    report_pow2(c, std::cout, true);
  }
  return 0;
}

int cmd_known_gaps(const Globals& g, int n) {
  const auto gaps = known_gaps(g.classification(n), g.jobs);
  if (g.as_json())
    print_json({{"n", n}, {"pairs", gaps_json(gaps)}});
  else
    print_gaps(gaps);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pillar entries, tangent-cone classes and rank equations of Schubert varieties"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--cache", g.cache, "Directory for classification caches");
  app.add_option("--jobs", g.jobs, "Worker threads (0: one per hardware thread)")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", g.budget, "Maximum number of F_q points per sweep");

  std::string perm;
  std::string text;
  int n = 0;
  std::vector<int> ns;
  int t = 1;
  int q = 2;
  int samples = 0;
  std::uint64_t seed = 1;
  std::string scope = "pillar";
  std::string semantics = "variety";
  bool flag_a = false;
  bool flag_b = false;
  bool flag_c = false;
  int code = 0;

  auto perm_arg = [&](CLI::App* sub) { sub->add_option("perm", perm, "Permutation, e.g. 4231 or 12,2,9,...")->required(); };

  auto* rank = app.add_subcommand("rank", "Rank matrix with pillar and essential entries marked");
  perm_arg(rank);
  rank->callback([&] { code = cmd_rank(g, perm); });

  auto* pillars = app.add_subcommand("pillars", "Pillar entries and their linked classes");
  perm_arg(pillars);
  pillars->callback([&] { code = cmd_pillars(g, perm); });

  auto* essential = app.add_subcommand("essential", "Essential entries");
  perm_arg(essential);
  essential->callback([&] { code = cmd_essential(g, perm); });

  auto* rothe_cmd = app.add_subcommand("rothe", "Rothe diagram");
  perm_arg(rothe_cmd);
  rothe_cmd->add_flag("--opposite", flag_a, "Opposite shading, marking pillar entries");
  rothe_cmd->callback([&] { code = cmd_rothe(g, perm, flag_a); });

  auto* recon = app.add_subcommand("reconstruct", "Permutation from a pillar set such as \"n=4; 2,2=1\"");
  recon->add_option("pillars", text, "Pillar set")->required();
  recon->add_flag("--trace", flag_a, "Show the dots placed at each step");
  recon->callback([&] { code = cmd_reconstruct(g, text, flag_a); });

  auto* codim = app.add_subcommand("codim", "Codimension from the inversions and from the pillars");
  perm_arg(codim);
  codim->callback([&] { code = cmd_codim(g, perm); });

  auto* trunc = app.add_subcommand("truncate", "Permutation with the first t linked classes as pillars");
  perm_arg(trunc);
  trunc->add_option("--t", t, "Number of classes kept")->required();
  trunc->callback([&] { code = cmd_truncate(g, perm, t); });

  auto* trp = app.add_subcommand("transpose", "Transpose the first t linked classes directly");
  perm_arg(trp);
  trp->add_option("--t", t, "Number of classes transposed")->required();
  trp->add_flag("--trace", flag_a, "Show the intermediate stages");
  trp->callback([&] { code = cmd_transpose(g, perm, t, flag_a); });

  auto* cone = app.add_subcommand("cone-class", "Closure under admissible partial transpositions");
  perm_arg(cone);
  cone->callback([&] { code = cmd_cone_class(g, perm); });

  auto* classify = app.add_subcommand("classify", "Tangent-cone classes of S_n");
  classify->add_option("--n", n, "Size of the permutations")->required()->check(CLI::Range(1, 8));
  classify->add_flag("--by-dim", flag_a, "Print counts per dimension");
  classify->add_flag("--check-pow2", flag_b, "Report classes whose size is not a power of 2");
  classify->add_flag("--known-gaps", flag_c, "Report non-admissible coincidences");
  classify->callback([&] { code = cmd_classify(g, n, flag_a, flag_b, flag_c); });

  auto* tables = app.add_subcommand("tables", "Schubert varieties and tangent cones per dimension");
  tables->add_option("--n", ns, "One or more values of n")->required()->check(CLI::Range(2, 8));
  tables->callback([&] { code = cmd_tables(g, ns); });

  auto* eqs = app.add_subcommand("equations", "Minors cutting out the Schubert variety near the standard flag");
  perm_arg(eqs);
  eqs->add_option("--scope", scope, "pillar or all")->check(CLI::IsMember({"pillar", "all"}));
  eqs->callback([&] { code = cmd_equations(g, perm, scope); });

  auto* count = app.add_subcommand("count", "Number of F_q points satisfying the rank conditions");
  perm_arg(count);
  count->add_option("--q", q, "Field size")->required()->check(CLI::IsMember({2, 3, 5}));
  count->add_option("--scope", scope, "pillar or all")->check(CLI::IsMember({"pillar", "all"}));
  count->add_option("--semantics", semantics, "cell or variety")->check(CLI::IsMember({"cell", "variety"}));
  count->callback([&] { code = cmd_count(g, perm, q, scope, semantics); });

  auto* verify = app.add_subcommand("verify-pillar-sufficiency", "Compare pillar and full systems over F_q");
  verify->add_option("--n", n, "Size of the permutations")->required()->check(CLI::Range(2, 6));
  verify->add_option("--q", q, "Field size")->required()->check(CLI::IsMember({2, 3, 5}));
  verify->add_option("--samples", samples, "Random sample size (0: all of S_n)")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Seed for sampling");
  verify->callback([&] { code = cmd_verify(g, n, q, samples, seed); });

  auto* pow2 = app.add_subcommand("check-pow2", "Report classes whose size is not a power of 2");
  pow2->add_option("--n", n, "Size of the permutations")->required()->check(CLI::Range(1, 8));
  pow2->callback([&] { code = cmd_check_pow2(g, n); });

  auto* gaps = app.add_subcommand("known-gaps", "Equal-length pairs linked only by non-admissible transpositions");
  gaps->add_option("--n", n, "Size of the permutations")->required()->check(CLI::Range(1, 8));
  gaps->callback([&] { code = cmd_known_gaps(g, n); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return code;
}
