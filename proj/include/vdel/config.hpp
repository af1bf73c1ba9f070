#pragma once

#include "cvd.hpp"
#include "dhvd.hpp"
#include "pmfd.hpp"

namespace vdel {

// Every tunable with its default, bounds and help text. Precedence:
// defaults < config file < command-line flags.

struct ConfigKey {
  std::string key;
  std::string def;
  std::string kind; // int | bool | choice
  long min = 0;
  long max = 0;     // 0: unbounded
  std::vector<std::string> choices;
  std::string help;
};

inline const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> k{
      {"lp.row_budget_factor", "40", "int", 1, 0, {}, "cutting-plane rows allowed per vertex"},
      {"lp.min_rows", "256", "int", 1, 0, {}, "minimum cutting-plane row budget"},
      {"separator.strategy", "auto", "choice", 0, 0, {"auto", "exact", "local"},
       "auto: exhaustive up to exact_threshold then local search; exact: exhaustive up to 20 vertices; local: "
       "local search only"},
      {"separator.exact_threshold", "14", "int", 0, 20, {}, "exhaustive separator search up to this many vertices"},
      {"separator.flow_samples", "12", "int", 0, 0, {}, "sampled vertex pairs whose min vertex cuts seed local search"},
      {"separator.swap_iters", "200", "int", 0, 0, {}, "local-search improvement steps"},
      {"separator.set_budget", "4000", "int", 1, 0, {}, "candidate bounded sets tried by the set+separator search"},
      {"separator.screen_above", "64", "int", 0, 0, {}, "more candidate structures than this are screened by a cheap separator first"},
      {"separator.screen_keep", "8", "int", 0, 0, {}, "structures kept after screening for the full search (0: no screening)"},
      {"cvd.short_hole_len", "12", "int", 4, 0, {}, "holes up to this length are hit by LP rounding first"},
      {"cvd.c", "9", "int", 2, 0, {}, "special case strips LP values >= 1/(c log n)"},
      {"cvd.d", "96", "int", 1, 0, {}, "certified factor D in D log^2 n"},
      {"cvd.exact_below", "64", "int", 0, 0, {}, "special case tries exact search below this n"},
      {"cvd.exact_budget", "20000", "int", 1, 0, {}, "node budget of that exact search"},
      {"dhvd.obstruction_size", "8", "int", 5, 0, {}, "DH-obstructions up to this size are hit by LP rounding first"},
      {"dhvd.d", "96", "int", 1, 0, {}, "certified factor D in D log^3 n"},
      {"pmfd.family", "c3", "choice", 0, 0, {"k2", "c3", "k4"}, "excluded minor family"},
      {"pmfd.d", "96", "int", 1, 0, {}, "certified factor D in D log^2 n"},
      {"pmfd.m_candidates", "200000", "int", 1, 0, {}, "cap on small modulator candidates per call"},
      {"pmfd.special_budget", "2000000", "int", 1, 0, {}, "branch-and-bound nodes in the exact special case"},
      {"multicut.mode", "auto", "choice", 0, 0, {"auto", "chordal", "general"},
       "auto: chordal rounding when the graph is chordal, region growing otherwise"},
      {"bench.exact_max_n", "14", "int", 0, 16, {}, "exact oracle runs on instances up to this n"},
      {"run.strict", "false", "bool", 0, 0, {}, "fail (exit 3) when a repair safety net fires"},
      {"run.jobs", "1", "int", 1, 256, {}, "worker threads for bench"},
  };
  return k;
}

class Config {
public:
  Config() {
    for (auto& k : config_keys()) vals_[k.key] = k.def;
  }

  void set(const std::string& key, const std::string& value) {
    const ConfigKey* spec = nullptr;
    for (auto& k : config_keys())
      if (k.key == key) spec = &k;
    if (!spec) throw InputError("unknown config key: " + key);
    if (spec->kind == "int") {
      long v;
      try {
        size_t pos;
        v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw InputError(key + ": expected an integer, got '" + value + "'");
      }
      if (v < spec->min) throw InputError(key + " = " + value + " is below its minimum " + std::to_string(spec->min));
      if (spec->max && v > spec->max)
        throw InputError(key + " = " + value + " is above its maximum " + std::to_string(spec->max));
    } else if (spec->kind == "bool") {
      if (value != "true" && value != "false") throw InputError(key + ": expected true or false");
    } else if (std::find(spec->choices.begin(), spec->choices.end(), value) == spec->choices.end()) {
      throw InputError(key + ": invalid choice '" + value + "'");
    }
    vals_[key] = value;
  }

  void merge_json(const Json& j) {
    if (!j.is_object()) throw InputError("config file must be a JSON object");
    for (auto& [k, v] : j.items()) {
      if (v.is_string())
        set(k, v.get<std::string>());
      else if (v.is_boolean())
        set(k, v.get<bool>() ? "true" : "false");
      else if (v.is_number_integer())
        set(k, std::to_string(v.get<long>()));
      else
        throw InputError("config " + k + ": expected string, integer or boolean");
    }
  }

  const std::string& str(const std::string& k) const { return vals_.at(k); }
  long num(const std::string& k) const { return std::stol(vals_.at(k)); }
  bool flag(const std::string& k) const { return vals_.at(k) == "true"; }

  Json to_json() const {
    Json j = Json::object();
    for (auto& k : config_keys()) j[k.key] = vals_.at(k.key);
    return j;
  }

  LpOptions lp() const { return {size_t(num("lp.row_budget_factor")), size_t(num("lp.min_rows"))}; }

  SeparatorOptions sep() const {
    SeparatorOptions s;
    s.exact_threshold = int(num("separator.exact_threshold"));
    if (str("separator.strategy") == "exact") s.exact_threshold = 20;
    if (str("separator.strategy") == "local") s.exact_threshold = 0;
    s.flow_samples = int(num("separator.flow_samples"));
    s.swap_iters = int(num("separator.swap_iters"));
    s.set_budget = size_t(num("separator.set_budget"));
    s.screen_above = size_t(num("separator.screen_above"));
    s.screen_keep = size_t(num("separator.screen_keep"));
    return s;
  }

  CvdOptions cvd() const {
    CvdOptions o;
    o.short_hole_len = int(num("cvd.short_hole_len"));
    o.c = num("cvd.c");
    o.d = num("cvd.d");
    o.exact_below = int(num("cvd.exact_below"));
    o.exact_budget = size_t(num("cvd.exact_budget"));
    o.lp = lp();
    o.sep = sep();
    o.strict = flag("run.strict");
    return o;
  }

  DhvdOptions dhvd() const {
    DhvdOptions o;
    o.obstruction_size = int(num("dhvd.obstruction_size"));
    o.d = num("dhvd.d");
    o.lp = lp();
    o.sep = sep();
    o.strict = flag("run.strict");
    return o;
  }

  PmfdOptions pmfd() const {
    PmfdOptions o;
    o.d = num("pmfd.d");
    o.m_candidates = size_t(num("pmfd.m_candidates"));
    o.special_budget = size_t(num("pmfd.special_budget"));
    o.sep = sep();
    o.strict = flag("run.strict");
    return o;
  }

private:
  std::map<std::string, std::string> vals_;
};

inline std::string config_markdown() {
  std::string s = "# Configuration\n\n"
                  "Generated by `vdel config --markdown`; do not edit by hand.\n\n"
                  "Defaults are overridden by a `--config file.json` object of `key: value` pairs, which is in turn "
                  "overridden by command-line flags (`--set key=value` or the per-subcommand shortcuts).\n\n"
                  "| key | default | allowed | description |\n|---|---|---|---|\n";
  for (auto& k : config_keys()) {
    std::string allowed;
    if (k.kind == "int")
      allowed = ">= " + std::to_string(k.min) + (k.max ? ", <= " + std::to_string(k.max) : "");
    else if (k.kind == "bool")
      allowed = "true, false";
    else
      for (auto& c : k.choices) allowed += (allowed.empty() ? "" : ", ") + c;
    s += "| `" + k.key + "` | `" + k.def + "` | " + allowed + " | " + k.help + " |\n";
  }
  return s;
}

} // namespace vdel
