#pragma once

#include "io.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace vdel {

// Per-run audit record: binds a solution to the lower bound it is measured
// against. All rationals serialize as canonical "p/q" strings.
// Raised in strict mode when a solver needed the repair safety net.
struct RepairUsed : std::runtime_error {
  explicit RepairUsed(const std::string& m) : std::runtime_error(m) {}
};

struct Certificate {
  std::string problem;
  IdSet solution;
  Rational weight;
  Rational lp_bound;                 // main LP lower bound
  Rational hitting_lp;               // preprocessing LP bound (CVD/DHVD), else 0
  std::optional<Rational> exact_opt; // when an exact oracle ran
  std::string factor_formula;        // human readable, e.g. "32*lp"
  Rational claimed_bound;            // value the weight is checked against
  bool feasible = false;
  bool bound_ok = false;
  std::map<std::string, Rational> phases;
  std::map<std::string, long> counters;
  std::map<std::string, std::string> constants;

  void bump(const std::string& k, long by = 1) { counters[k] += by; }
  long count(const std::string& k) const {
    auto it = counters.find(k);
    return it == counters.end() ? 0 : it->second;
  }
  void add_phase(const std::string& k, const Rational& w) { phases[k] += w; }
};

inline Json certificate_to_json(const Certificate& c) {
  Json j;
  j["problem"] = c.problem;
  j["solution"] = c.solution;
  j["weight"] = to_string(c.weight);
  j["lp_bound"] = to_string(c.lp_bound);
  j["hitting_lp"] = to_string(c.hitting_lp);
  j["exact_opt"] = c.exact_opt ? Json(to_string(*c.exact_opt)) : Json(nullptr);
  j["factor"] = c.factor_formula;
  j["claimed_bound"] = to_string(c.claimed_bound);
  j["feasible"] = c.feasible;
  j["bound_ok"] = c.bound_ok;
  Json ph = Json::object();
  for (auto& [k, v] : c.phases) ph[k] = to_string(v);
  j["phases"] = ph;
  Json ct = Json::object();
  for (auto& [k, v] : c.counters) ct[k] = v;
  j["counters"] = ct;
  Json cs = Json::object();
  for (auto& [k, v] : c.constants) cs[k] = v;
  j["constants"] = cs;
  return j;
}

// Merge counters and phases of a sub-run.
inline void absorb(Certificate& into, const Certificate& from) {
  for (auto& [k, v] : from.counters) into.counters[k] += v;
  for (auto& [k, v] : from.phases) into.phases[k] += v;
}

} // namespace vdel
