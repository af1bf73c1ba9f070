#include <vdel/bench.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace vdel;

namespace {

constexpr int kOk = 0, kInfeasible = 2, kViolation = 3, kUsage = 64, kBadInput = 65;

struct Common {
  std::string config_file;
  std::vector<std::string> sets;
  bool json = false;
  bool strict = false;
  std::string dump_cert;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config_file, "JSON object of config overrides (see CONFIG.md)");
  sub->add_option("--set", c.sets, "override one config key: key=value (repeatable)");
  sub->add_flag("--json", c.json, "print the certificate as JSON");
  sub->add_flag("--strict", c.strict, "exit 3 if a repair safety net fires (config run.strict)");
  sub->add_option("--dump-cert", c.dump_cert, "write the certificate JSON to this file");
}

std::string default_of(const std::string& key) {
  for (auto& k : config_keys())
    if (k.key == key) return k.def;
  return "";
}

std::string help_for(const std::string& key) {
  for (auto& k : config_keys())
    if (k.key == key) return k.help + " (config " + key + ", default " + k.def + ")";
  return key;
}

Config build_config(const Common& c, const std::vector<std::pair<std::string, std::string>>& shortcuts) {
  Config cfg;
  if (!c.config_file.empty()) cfg.merge_json(parse_json_exact(read_file(c.config_file)));
  for (auto& kv : c.sets) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw InputError("--set expects key=value, got " + kv);
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  for (auto& [k, v] : shortcuts) cfg.set(k, v);
  if (c.strict) cfg.set("run.strict", "true");
  return cfg;
}

void print_cert(const Certificate& c, const Common& com) {
  Json j = certificate_to_json(c);
  if (!com.dump_cert.empty()) write_file(com.dump_cert, j.dump(2) + "\n");
  if (com.json) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::string sol;
  for (int v : c.solution) sol += (sol.empty() ? "" : " ") + std::to_string(v);
  std::cout << "problem        " << c.problem << "\n"
            << "weight         " << to_string(c.weight) << "\n"
            << "solution       {" << sol << "}\n"
            << "lp_bound       " << to_string(c.lp_bound) << "\n";
  if (c.hitting_lp != 0) std::cout << "hitting_lp     " << to_string(c.hitting_lp) << "\n";
  std::cout << "claimed_bound  " << to_string(c.claimed_bound) << "  (" << c.factor_formula << ")\n";
  for (auto& [k, v] : c.constants) std::cout << "constant       " << k << " = " << v << "\n";
  std::cout << "repairs        " << c.count("repairs") << "\n"
            << "feasible       " << (c.feasible ? "yes" : "NO") << "\n"
            << "bound_ok       " << (c.bound_ok ? "yes" : "NO") << "\n";
}

int cert_exit(const Certificate& c, const Config& cfg) {
  if (!c.feasible) return kInfeasible;
  if (!c.bound_ok) return kViolation;
  if (cfg.flag("run.strict") && c.count("repairs") > 0) return kViolation;
  return kOk;
}

IdSet read_solution(const std::string& path) {
  Json j = parse_json_exact(read_file(path));
  if (j.is_object() && j.contains("solution")) j = j["solution"];
  if (!j.is_array()) throw InputError("solution file: expected an array of vertex ids or {\"solution\": [...]}");
  IdSet s;
  for (auto& x : j) s.push_back(json_int(x, "solution vertex"));
  std::sort(s.begin(), s.end());
  return s;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"vdel: approximation algorithms for weighted vertex deletion, with certificates"};
  app.require_subcommand(1);

  Common com;
  std::string input, weights, sep_strategy, family, mode;
  int short_hole = 0, obstruction = 0;

  auto solver = [&](const std::string& name, const std::string& desc) {
    auto* s = app.add_subcommand(name, desc);
    s->add_option("--input", input, "graph file: JSON, or DIMACS edge list")->required();
    s->add_option("--weights", weights, "weight file for an edge-list input");
    s->add_option("--separator-strategy", sep_strategy, help_for("separator.strategy"))
        ->check(CLI::IsMember({"auto", "exact", "local"}));
    add_common(s, com);
    return s;
  };
  auto* cvd = solver("cvd", "weighted chordal vertex deletion");
  cvd->add_option("--short-hole-len", short_hole, help_for("cvd.short_hole_len"));
  auto* dhvd = solver("dhvd", "weighted distance-hereditary vertex deletion");
  dhvd->add_option("--short-hole-len", short_hole, "accepted for symmetry with cvd; unused");
  dhvd->add_option("--obstruction-size", obstruction, help_for("dhvd.obstruction_size"));
  auto* pmfd = solver("pmfd", "weighted deletion to a minor-free family {k2 | c3 | k4}");
  pmfd->add_option("--family", family, help_for("pmfd.family"))->check(CLI::IsMember({"k2", "c3", "k4"}));

  auto* mc = app.add_subcommand("multicut", "vertex multicut; input {\"graph\": ..., \"pairs\": [[s,t],...]}");
  mc->add_option("--input", input, "instance JSON")->required();
  mc->add_option("--mode", mode, help_for("multicut.mode"))->check(CLI::IsMember({"auto", "chordal", "general"}));
  add_common(mc, com);

  std::string spec_file, out;
  auto* gen = app.add_subcommand("gen", "generate an instance from a spec JSON");
  gen->add_option("--spec", spec_file, "instance spec JSON (family, n, generator, seed, weights, ...)")->required();
  gen->add_option("--out", out, "output file (default: stdout)");

  std::string suite;
  int jobs = 0;
  auto* bench = app.add_subcommand("bench", "run a suite; writes records.csv, certificates.jsonl, summary.json");
  bench->add_option("--suite", suite, "suite JSON")->required();
  bench->add_option("--out", out, "output directory")->required();
  bench->add_option("--jobs", jobs, help_for("run.jobs"))->check(CLI::Range(1, 256));
  add_common(bench, com);

  std::string problem, graph_file, solution_file;
  auto* verify = app.add_subcommand("verify", "check a solution; exit 0 feasible, 2 infeasible, 3 bound violated");
  verify->add_option("--problem", problem, "cvd | dhvd | pmfd | multicut")
      ->required()
      ->check(CLI::IsMember({"cvd", "dhvd", "pmfd", "multicut"}));
  verify->add_option("--graph", graph_file, "graph file (multicut: instance JSON)")->required();
  verify->add_option("--solution", solution_file, "array of vertex ids, or a certificate JSON")->required();
  verify->add_option("--family", family, help_for("pmfd.family"))->check(CLI::IsMember({"k2", "c3", "k4"}));

  std::string dump_lp;
  auto* lp = app.add_subcommand("lp", "solve an LP relaxation and print its value");
  lp->add_option("--problem", problem, "cvd (all holes) | dhvd (listed + separated DH-obstructions) | multicut")
      ->required()
      ->check(CLI::IsMember({"cvd", "dhvd", "multicut"}));
  lp->add_option("--input", input, "graph file (multicut: instance JSON)")->required();
  lp->add_option("--dump-lp", dump_lp, "write rows and solution as JSON");
  add_common(lp, com);

  bool markdown = false;
  auto* cfgcmd = app.add_subcommand("config", "print the effective configuration");
  cfgcmd->add_flag("--markdown", markdown, "print the CONFIG.md reference instead");
  add_common(cfgcmd, com);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::vector<std::pair<std::string, std::string>> sc;
    if (!sep_strategy.empty()) sc.emplace_back("separator.strategy", sep_strategy);
    if (short_hole && app.got_subcommand(cvd)) sc.emplace_back("cvd.short_hole_len", std::to_string(short_hole));
    if (obstruction) sc.emplace_back("dhvd.obstruction_size", std::to_string(obstruction));
    if (!family.empty()) sc.emplace_back("pmfd.family", family);
    if (!mode.empty()) sc.emplace_back("multicut.mode", mode);
    if (jobs) sc.emplace_back("run.jobs", std::to_string(jobs));
    Config cfg = build_config(com, sc);

    if (app.got_subcommand(cvd) || app.got_subcommand(dhvd) || app.got_subcommand(pmfd)) {
      Graph g = read_graph_any(input, weights);
      Certificate c = app.got_subcommand(cvd)    ? solve_cvd(g, cfg.cvd()).cert
                      : app.got_subcommand(dhvd) ? solve_dhvd(g, cfg.dhvd()).cert
                                                 : solve_pmfd(g, minor_family(cfg.str("pmfd.family")), cfg.pmfd()).cert;
      print_cert(c, com);
      return cert_exit(c, cfg);
    }
    if (app.got_subcommand(mc)) {
      auto inst = multicut_from_json(parse_json_exact(read_file(input)));
      bool chordal = cfg.str("multicut.mode") == "chordal" ||
                     (cfg.str("multicut.mode") == "auto" && is_chordal(inst.graph));
      Certificate c = chordal ? solve_multicut_chordal(inst, cfg.lp()).cert : solve_multicut_general(inst, cfg.lp()).cert;
      print_cert(c, com);
      return cert_exit(c, cfg);
    }
    if (app.got_subcommand(gen)) {
      Instance inst = gen_instance(spec_from_json(parse_json_exact(read_file(spec_file))));
      std::string text = instance_to_json(inst).dump(1) + "\n";
      if (out.empty())
        std::cout << text;
      else
        write_file(out, text);
      return kOk;
    }
    if (app.got_subcommand(bench)) {
      Json sj = parse_json_exact(read_file(suite));
      std::string name = sj.is_object() && sj.contains("name") && sj["name"].is_string() ? sj["name"].get<std::string>()
                                                                                            : "unnamed";
      auto recs = run_bench(expand_suite(sj), cfg);
      auto s = write_bench(out, recs, name, cfg);
      if (com.json)
        std::cout << s.json.dump(2) << "\n";
      else
        for (auto& [fam, p] : s.json["problems"].items())
          std::cout << fam << ": " << p["records"] << " records, " << p["feasible"] << " feasible, "
                    << p["violations"] << " violations, " << p["repairs"] << " repairs, max certified ratio "
                    << (p["certified_ratio"].contains("max_approx") ? p["certified_ratio"]["max_approx"].get<std::string>()
                                                                    : "-")
                    << "\n";
      return s.exit_code;
    }
    if (app.got_subcommand(verify)) {
      Json gj = parse_json_exact(read_file(graph_file));
      Instance inst;
      inst.spec.family = problem == "multicut" ? "multicut-general" : problem;
      inst.spec.minor = cfg.str("pmfd.family");
      if (problem == "multicut") {
        auto mi = multicut_from_json(gj);
        inst.graph = mi.graph;
        inst.pairs = mi.pairs;
      } else {
        inst.graph = read_graph_any(graph_file);
      }
      IdSet ids = read_solution(solution_file);
      VertexSet s = inst.graph.from_ids(ids);
      if (s.size() != ids.size()) throw InputError("solution names a vertex not in the graph");
      bool ok = deletion_feasible(inst, s);
      std::cout << "weight   " << to_string(inst.graph.weight(s)) << "\nfeasible " << (ok ? "yes" : "NO") << "\n";
      if (!ok) return kInfeasible;
      Json sj = parse_json_exact(read_file(solution_file));
      if (sj.is_object() && sj.contains("claimed_bound")) {
        bool bound = inst.graph.weight(s) <= json_rational(sj["claimed_bound"]) &&
                     (!sj.contains("weight") || json_rational(sj["weight"]) == inst.graph.weight(s));
        std::cout << "bound_ok " << (bound ? "yes" : "NO") << "\n";
        if (!bound) return kViolation;
      }
      return kOk;
    }
    if (app.got_subcommand(lp)) {
      LpResult r;
      if (problem == "multicut") {
        r = multicut_lp(multicut_from_json(parse_json_exact(read_file(input))), cfg.lp());
      } else {
        Graph g = read_graph_any(input);
        r = problem == "cvd" ? hole_lp(g, cfg.lp()) : dh_lp(g, cfg.lp());
      }
      Json j;
      j["problem"] = problem;
      j["value"] = to_string(r.value);
      Json x = Json::array();
      for (auto& v : r.x) x.push_back(to_string(v));
      j["x"] = x;
      j["rounds"] = r.rounds;
      Json rows = Json::array();
      for (size_t i = 0; i < r.rows.size(); ++i) {
        Json row;
        row["vertices"] = r.rows[i];
        if (i < r.row_duals.size()) row["dual"] = to_string(r.row_duals[i]);
        rows.push_back(row);
      }
      if (!dump_lp.empty()) {
        Json d = j;
        d["rows"] = rows;
        write_file(dump_lp, d.dump(2) + "\n");
      }
      if (com.json)
        std::cout << j.dump(2) << "\n";
      else
        std::cout << "lp value " << to_string(r.value) << " (" << r.rows.size() << " rows, " << r.rounds
                  << " rounds)\n";
      return kOk;
    }
    if (app.got_subcommand(cfgcmd)) {
      std::cout << (markdown ? config_markdown() : cfg.to_json().dump(2) + "\n");
      return kOk;
    }
  } catch (const RepairUsed& e) {
    std::cerr << "vdel: " << e.what() << "\n";
    return kViolation;
  } catch (const InputError& e) {
    std::cerr << "vdel: bad input: " << e.what() << "\n";
    return kBadInput;
  } catch (const InternalError& e) {
    std::cerr << "vdel: internal check failed: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "vdel: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
