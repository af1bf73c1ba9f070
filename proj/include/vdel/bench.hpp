#pragma once

#include "config.hpp"
#include "exact.hpp"
#include "generators.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <thread>

namespace vdel {

// Benchmark runner: generate, solve, audit against the toolkits and (for
// small n) the exact oracle; emit CSV + JSON in deterministic order.

constexpr int kBenchSchema = 1;

// Feasibility of deleting s, checked with the recognizers (not the solvers).
inline bool deletion_feasible(const Instance& inst, const VertexSet& s) {
  const std::string& f = inst.spec.family;
  if (f.rfind("multicut", 0) == 0) return verify_multicut(inst.graph, inst.pairs, s);
  Graph rest = remove_vertices(inst.graph, s).graph;
  if (f == "cvd") return is_chordal(rest);
  if (f == "dhvd") return is_distance_hereditary(rest);
  return is_minor_free(rest, minor_family(inst.spec.minor));
}

// Exact optimum by subset enumeration; `by_cardinality` selects the second,
// independently ordered enumerator used for cross-checking.
inline ExactResult exact_oracle(const Instance& inst, int max_n = -1, bool by_cardinality = false) {
  if (max_n < 0) max_n = inst.spec.family == "pmfd" ? 14 : 16;
  DeletionPredicate pred = [&](const VertexSet& s) { return deletion_feasible(inst, s); };
  return by_cardinality ? exact_by_cardinality(inst.graph, pred, max_n) : exact_by_weight_order(inst.graph, pred, max_n);
}

inline Certificate solve_instance(const Instance& inst, const Config& cfg) {
  const std::string& f = inst.spec.family;
  if (f == "cvd") return solve_cvd(inst.graph, cfg.cvd()).cert;
  if (f == "dhvd") return solve_dhvd(inst.graph, cfg.dhvd()).cert;
  if (f == "pmfd") return solve_pmfd(inst.graph, minor_family(inst.spec.minor), cfg.pmfd()).cert;
  auto mi = make_multicut(inst.graph, inst.pairs);
  bool chordal = f == "multicut-chordal";
  if (cfg.str("multicut.mode") != "auto") chordal = cfg.str("multicut.mode") == "chordal";
  return chordal ? solve_multicut_chordal(mi, cfg.lp()).cert : solve_multicut_general(mi, cfg.lp()).cert;
}

struct BenchRecord {
  size_t index = 0;
  InstanceSpec spec;
  int edges = 0;
  std::optional<Certificate> cert; // absent when the solver threw
  bool feasible = false;           // re-checked here, not taken from the certificate
  Rational lower;                  // best lower bound: max(lp, hitting lp)
  std::optional<Rational> exact;
  std::vector<std::string> violations;
  double wall_ms = 0;
};

inline std::optional<Rational> safe_ratio(const Rational& w, const Rational& lb) {
  if (lb == 0) return w == 0 ? std::optional<Rational>(Rational(1)) : std::nullopt;
  return Rational(w / lb);
}

inline BenchRecord run_one(const InstanceSpec& spec, size_t index, const Config& cfg) {
  BenchRecord r;
  r.index = index;
  r.spec = spec;
  auto t0 = std::chrono::steady_clock::now();
  Instance inst = gen_instance(spec);
  r.edges = inst.graph.m();
  try {
    Certificate c = solve_instance(inst, cfg);
    VertexSet s = inst.graph.from_ids(c.solution);
    r.feasible = deletion_feasible(inst, s);
    r.lower = rmax(c.lp_bound, c.hitting_lp);
    if (inst.graph.weight(s) != c.weight) r.violations.push_back("weight mismatch");
    if (!c.bound_ok || c.weight > c.claimed_bound) r.violations.push_back("claimed bound exceeded");
    if (c.weight < r.lower) r.violations.push_back("weight below lower bound");
    if (cfg.flag("run.strict") && c.count("repairs") > 0) r.violations.push_back("repair fired");
    if (inst.graph.n() <= cfg.num("bench.exact_max_n")) {
      r.exact = exact_oracle(inst).weight;
      if (*r.exact > c.weight) r.violations.push_back("weight below exact optimum");
      if (r.lower > *r.exact) r.violations.push_back("lower bound above exact optimum");
      c.exact_opt = r.exact;
    }
    r.cert = std::move(c);
  } catch (const RepairUsed& e) {
    r.violations.push_back(std::string("strict: ") + e.what());
  } catch (const InternalError& e) {
    r.violations.push_back(std::string("internal: ") + e.what());
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Suite: {"name": s, "items": [{spec keys..., "n": int | [ints], "seeds": [ints] | {"from": a, "count": c}}]}
inline std::vector<InstanceSpec> expand_suite(const Json& suite) {
  if (!suite.is_object()) throw InputError("suite must be a JSON object");
  std::vector<InstanceSpec> out;
  if (!suite.contains("items")) return out;
  if (!suite["items"].is_array()) throw InputError("suite.items must be an array");
  for (auto& item : suite["items"]) {
    if (!item.is_object()) throw InputError("suite item must be an object");
    Json base = item;
    base.erase("n");
    base.erase("seeds");
    std::vector<int> ns{InstanceSpec{}.n};
    if (item.contains("n")) {
      ns.clear();
      if (item["n"].is_array())
        for (auto& x : item["n"]) ns.push_back(json_int(x, "suite n"));
      else
        ns.push_back(json_int(item["n"], "suite n"));
    }
    std::vector<uint64_t> seeds{1};
    if (item.contains("seeds")) {
      seeds.clear();
      auto& sj = item["seeds"];
      if (sj.is_array()) {
        for (auto& x : sj) seeds.push_back(uint64_t(json_int(x, "suite seed")));
      } else if (sj.is_object() && sj.contains("from") && sj.contains("count")) {
        int from = json_int(sj["from"], "seeds.from"), cnt = json_int(sj["count"], "seeds.count");
        for (int i = 0; i < cnt; ++i) seeds.push_back(uint64_t(from + i));
      } else {
        throw InputError("suite seeds must be an array or {from, count}");
      }
    }
    for (int n : ns)
      for (uint64_t sd : seeds) {
        Json j = base;
        j["n"] = n;
        j["seed"] = sd;
        out.push_back(spec_from_json(j));
      }
  }
  return out;
}

// Records come back in suite order whatever the number of workers.
inline std::vector<BenchRecord> run_bench(const std::vector<InstanceSpec>& specs, const Config& cfg) {
  std::vector<BenchRecord> recs(specs.size());
  int jobs = int(std::max(1L, cfg.num("run.jobs")));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next++) < specs.size();) recs[i] = run_one(specs[i], i, cfg);
  };
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return recs;
}

inline std::string csv_header() {
  return "schema,rng,index,family,generator,minor,n,m,seed,weights,weight,lp_bound,hitting_lp,lower_bound,"
         "claimed_bound,exact_opt,certified_ratio,true_ratio,feasible,bound_ok,repairs,violations";
}

inline std::string csv_row(const BenchRecord& r) {
  auto opt = [](const std::optional<Rational>& x) { return x ? to_string(*x) : std::string(); };
  std::string v;
  for (auto& s : r.violations) v += (v.empty() ? "" : ";") + s;
  for (char& ch : v)
    if (ch == ',' || ch == '"' || ch == '\n') ch = ' ';
  std::string row = std::to_string(kBenchSchema) + "," + Rng::kAlgorithm + "," + std::to_string(r.index) + "," +
                    r.spec.family + "," + r.spec.generator + "," + (r.spec.family == "pmfd" ? r.spec.minor : "") +
                    "," + std::to_string(r.spec.n) + "," + std::to_string(r.edges) + "," +
                    std::to_string(r.spec.seed) + "," + r.spec.weights + ",";
  if (r.cert) {
    auto& c = *r.cert;
    row += to_string(c.weight) + "," + to_string(c.lp_bound) + "," + to_string(c.hitting_lp) + "," +
           to_string(r.lower) + "," + to_string(c.claimed_bound) + "," + opt(r.exact) + "," +
           opt(safe_ratio(c.weight, r.lower)) + "," + (r.exact ? opt(safe_ratio(c.weight, *r.exact)) : "") + "," +
           (r.feasible ? "1" : "0") + "," + (c.bound_ok ? "1" : "0") + "," + std::to_string(c.count("repairs"));
  } else {
    row += ",,,,,,,,0,0,";
  }
  return row + "," + v;
}

struct BenchSummary {
  Json json;
  int exit_code = 0; // 0 ok, 2 infeasible output, 3 certificate violation
};

inline std::string approx(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", q.get_d());
  return buf;
}

inline BenchSummary summarize(const std::vector<BenchRecord>& recs, const std::string& name) {
  BenchSummary s;
  Json per = Json::object();
  bool infeasible = false, violated = false;
  std::map<std::string, std::vector<const BenchRecord*>> by;
  for (auto& r : recs) by[r.spec.family].push_back(&r);
  for (auto& [fam, rs] : by) {
    std::vector<Rational> cert_r, true_r;
    long feas = 0, viol = 0, repairs = 0, unbounded = 0;
    for (auto* r : rs) {
      if (r->cert && r->feasible) ++feas;
      if (!r->violations.empty()) ++viol;
      if (!r->cert) continue;
      repairs += r->cert->count("repairs");
      if (auto q = safe_ratio(r->cert->weight, r->lower))
        cert_r.push_back(*q);
      else
        ++unbounded;
      if (r->exact)
        if (auto q = safe_ratio(r->cert->weight, *r->exact)) true_r.push_back(*q);
    }
    auto stats = [](std::vector<Rational> v) {
      Json j = Json::object();
      if (v.empty()) return j;
      std::sort(v.begin(), v.end());
      j["max"] = to_string(v.back());
      j["max_approx"] = approx(v.back());
      j["median"] = to_string(v[(v.size() - 1) / 2]);
      j["median_approx"] = approx(v[(v.size() - 1) / 2]);
      return j;
    };
    Json p;
    p["records"] = rs.size();
    p["feasible"] = feas;
    p["all_feasible"] = feas == long(rs.size());
    p["violations"] = viol;
    p["repairs"] = repairs;
    p["zero_lower_bound_positive_weight"] = unbounded;
    p["certified_ratio"] = stats(cert_r);
    p["exact_count"] = true_r.size();
    p["true_ratio"] = stats(true_r);
    per[fam] = p;
    infeasible |= feas != long(rs.size());
    violated |= viol > 0;
  }
  s.exit_code = infeasible ? 2 : violated ? 3 : 0;
  s.json["schema"] = kBenchSchema;
  s.json["rng"] = Rng::kAlgorithm;
  s.json["suite"] = name;
  s.json["records"] = recs.size();
  s.json["all_feasible"] = !infeasible;
  s.json["problems"] = per;
  s.json["exit_code"] = s.exit_code;
  return s;
}

// Writes records.csv, certificates.jsonl, summary.json (all deterministic)
// and timings.csv (wall clock, excluded from the reproducible outputs).
inline BenchSummary write_bench(const std::string& dir, const std::vector<BenchRecord>& recs, const std::string& name,
                                const Config& cfg) {
  std::filesystem::create_directories(dir);
  std::string csv = csv_header() + "\n", certs, times = "index,wall_ms\n";
  for (auto& r : recs) {
    csv += csv_row(r) + "\n";
    Json cj = r.cert ? certificate_to_json(*r.cert) : Json(nullptr);
    Json line;
    line["index"] = r.index;
    line["spec"] = spec_to_json(r.spec);
    line["certificate"] = cj;
    certs += line.dump() + "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu,%.3f\n", r.index, r.wall_ms);
    times += buf;
  }
  auto s = summarize(recs, name);
  // run.jobs cannot change any result; leaving it out keeps the summary
  // byte-identical across job counts.
  s.json["config"] = cfg.to_json();
  s.json["config"].erase("run.jobs");
  write_file(dir + "/records.csv", csv);
  write_file(dir + "/certificates.jsonl", certs);
  write_file(dir + "/summary.json", s.json.dump(2) + "\n");
  write_file(dir + "/timings.csv", times);
  return s;
}

} // namespace vdel
