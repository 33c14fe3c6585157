#pragma once

// The function-table text format and the JSON report.
//
// Table format:
//   PFN 1 p=<p> n=<n>
//   <p^n decimal lines, line i = output index for input index i>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "semifield/base.hpp"
#include "semifield/invariants.hpp"
#include "semifield/vecfn.hpp"

namespace semifield {

inline void write_function_table(std::ostream& os, const VecFn& f) {
  os << "PFN 1 p=" << f.p << " n=" << f.dim << "\n";
  for (elem_t x = 0; x < f.size(); ++x) os << f.table[x] << "\n";
}

inline void write_function_table(const std::string& path, const VecFn& f) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_function_table(os, f);
}

inline VecFn read_function_table(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::runtime_error("function table: empty input");
  std::uint32_t version = 0, p = 0, n = 0;
  if (std::sscanf(header.c_str(), "PFN %u p=%u n=%u", &version, &p, &n) != 3 || version != 1)
    throw std::runtime_error("function table: bad header '" + header + "'");
  VecFn f = make_vecfn(p, n);
  for (elem_t x = 0; x < f.size(); ++x) {
    std::uint64_t v;
    if (!(is >> v)) throw std::runtime_error("function table: truncated data");
    if (v >= f.size()) throw std::runtime_error("function table: value out of range");
    f.table[x] = static_cast<elem_t>(v);
  }
  return f;
}

inline VecFn read_function_table(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  VecFn f = read_function_table(is);
  std::string extra;
  if (is >> extra) throw std::runtime_error("function table: trailing data in " + path);
  return f;
}

// Stable-key JSON serialization of an invariant report. Timing is injected by
// the caller only on request, so identical flags give byte-identical output.
inline nlohmann::ordered_json report_to_json(const InvariantReport& rep) {
  nlohmann::ordered_json j;
  j["tool"] = {{"name", "sftool"}, {"version", kVersion}};
  j["family"] = rep.family;
  nlohmann::ordered_json params;
  params["p"] = rep.p;
  params["dim"] = rep.dim;
  for (const auto& [key, val] : rep.params) params[key] = val;
  if (!rep.modulus.empty()) params["modulus"] = rep.modulus;
  j["parameters"] = params;

  nlohmann::ordered_json verdicts;
  verdicts["planar"] = rep.planar ? nlohmann::ordered_json(*rep.planar) : nullptr;
  verdicts["apn"] = rep.apn ? nlohmann::ordered_json(*rep.apn) : nullptr;
  if (rep.axioms) {
    const AxiomReport& a = *rep.axioms;
    verdicts["axioms"] = {
        {"left_distributive", a.left_distributive},
        {"right_distributive", a.right_distributive},
        {"commutative", a.commutative},
        {"no_zero_divisors", a.no_zero_divisors},
        {"unit", a.unit ? nlohmann::ordered_json(*a.unit) : nullptr},
        {"exhaustive", a.exhaustive},
    };
  } else {
    verdicts["axioms"] = nullptr;
  }
  j["verdicts"] = verdicts;

  nlohmann::ordered_json spec = nlohmann::ordered_json::object();
  for (const auto& [count, freq] : rep.spectrum) spec[std::to_string(count)] = freq;
  j["diff_spectrum"] = spec;

  if (rep.nuclei) {
    const NucleusReport& n = *rep.nuclei;
    j["nuclei"] = {
        {"left", n.left.size()},
        {"middle", n.middle.size()},
        {"right", n.right.size()},
        {"nucleus", n.nucleus.size()},
        {"predicted_middle", n.predicted_middle},
        {"predicted_nucleus", n.predicted_nucleus},
        {"fields_verified", n.left_is_field && n.middle_is_field && n.right_is_field &&
                                n.nucleus_is_field},
    };
  } else {
    j["nuclei"] = nullptr;
  }
  j["gamma_rank"] = rep.gamma_rank ? nlohmann::ordered_json(*rep.gamma_rank) : nullptr;
  return j;
}

}  // namespace semifield
