#pragma once

#include <cstdio>
#include <string>
#include <type_traits>

#include <json.hpp>

#include "cayley/algebra.hpp"
#include "cayley/numeric.hpp"
#include "cayley/subset.hpp"
#include "cayley/walk.hpp"

namespace cayley {

/// Exact weight rendering: rationals as p or p/q, floats to 12 significant
/// digits. These strings are the canonical report format; JSON stores them
/// verbatim so reports round-trip exactly.
inline std::string weight_to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline std::string weight_to_string(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// -- stabilization ----------------------------------------------------------

inline nlohmann::json to_json(const StabilizationReport& rep) {
  nlohmann::json j;
  j["stabilizes"] = rep.stabilizes;
  j["k"] = rep.k ? nlohmann::json(*rep.k) : nlohmann::json(nullptr);
  if (rep.cycle)
    j["cycle"] = {{"start", rep.cycle->start}, {"period", rep.cycle->period}};
  else
    j["cycle"] = nullptr;
  j["sizes"] = rep.sizes;
  return j;
}

inline std::string to_text(const StabilizationReport& rep) {
  std::string s;
  if (rep.stabilizes) {
    s += "stabilizes: yes (A^" + std::to_string(*rep.k) + " = G)\n";
  } else {
    s += "stabilizes: no (cycle: A^" + std::to_string(rep.cycle->start) +
         " recurs with period " + std::to_string(rep.cycle->period) + ")\n";
  }
  s += "sizes:";
  for (int v : rep.sizes) s += " " + std::to_string(v);
  s += "\n";
  return s;
}

// -- theorem-2 verification ---------------------------------------------------

inline nlohmann::json to_json(const VerificationReport& rep, bool include_counts = false) {
  nlohmann::json j;
  j["group"] = rep.group_description;
  j["order"] = rep.group_order;
  j["family"] = rep.family;
  j["n"] = rep.n;
  j["sizes"] = rep.sizes;
  j["complement_sizes"] = rep.complement_sizes;
  j["d"] = rep.d.str();
  j["pass"] = rep.pass;
  j["witness"] = rep.witness ? nlohmann::json(*rep.witness) : nlohmann::json(nullptr);
  j["checks"] = nlohmann::json::array();
  for (const auto& c : rep.checks)
    j["checks"].push_back(
        {{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  if (include_counts) {
    nlohmann::json counts = nlohmann::json::array();
    nlohmann::json counts_c = nlohmann::json::array();
    for (const auto& v : rep.counts) counts.push_back(v.str());
    for (const auto& v : rep.counts_complement) counts_c.push_back(v.str());
    j["counts"] = counts;
    j["counts_complement"] = counts_c;
  }
  return j;
}

inline std::string to_text(const VerificationReport& rep, bool include_counts = false) {
  std::string s;
  s += "group: " + rep.group_description + " (order " + std::to_string(rep.group_order) +
       ")\n";
  s += "family: " + rep.family + "\n";
  s += "sizes:";
  for (int v : rep.sizes) s += " " + std::to_string(v);
  s += "  complements:";
  for (int v : rep.complement_sizes) s += " " + std::to_string(v);
  s += "\n";
  s += "d: " + rep.d.str() + "\n";
  for (const auto& c : rep.checks) {
    s += "check " + c.name + ": " + to_string(c.status);
    if (!c.detail.empty()) s += " (" + c.detail + ")";
    s += "\n";
  }
  if (include_counts) {
    s += "counts:";
    for (const auto& v : rep.counts) s += " " + v.str();
    s += "\ncounts_complement:";
    for (const auto& v : rep.counts_complement) s += " " + v.str();
    s += "\n";
  }
  s += std::string("result: ") + (rep.pass ? "PASS" : "FAIL") + "\n";
  return s;
}

// -- convergence --------------------------------------------------------------

/// CSV trace, one row per convolution power: `n,tv`.
template <typename W>
std::string trace_csv(const ConvergenceReport<W>& rep) {
  std::string s = "n,tv\n";
  for (std::size_t i = 0; i < rep.tv_trace.size(); ++i)
    s += std::to_string(i + 1) + "," + weight_to_string(rep.tv_trace[i]) + "\n";
  return s;
}

template <typename W>
nlohmann::json to_json(const ConvergenceReport<W>& rep) {
  nlohmann::json j;
  j["converged"] = rep.converged;
  j["n_at_tol"] = rep.n_at_tol ? nlohmann::json(*rep.n_at_tol) : nlohmann::json(nullptr);
  j["steps"] = rep.tv_trace.size();
  j["tv_final"] =
      rep.tv_trace.empty() ? "" : weight_to_string(rep.tv_trace.back());
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& v : rep.tv_trace) trace.push_back(weight_to_string(v));
  j["tv_trace"] = trace;
  j["stabilization"] = to_json(rep.stabilization);
  return j;
}

template <typename W>
std::string to_text(const ConvergenceReport<W>& rep) {
  std::string s;
  if (rep.converged) {
    s += "converged: yes (tv < tol at n = " + std::to_string(*rep.n_at_tol) + ")\n";
  } else {
    s += "converged: no (after " + std::to_string(rep.tv_trace.size()) + " steps)\n";
  }
  if (!rep.tv_trace.empty())
    s += "tv at last step: " + weight_to_string(rep.tv_trace.back()) + "\n";
  s += to_text(rep.stabilization);
  return s;
}

}  // namespace cayley
