#pragma once

// Flat per-semigroup record shared by the CSV and JSONL emitters.

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nsg/conditions.hpp"
#include "nsg/error.hpp"
#include "nsg/intervals.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

struct SemigroupRecord {
  std::vector<Int> gens;
  Int m = 0;
  Int nu = 0;
  Int f = 0;
  Int c = 0;
  Int genus = 0;
  Int n = 0;
  Int t = 0;
  Int q = 0;
  Int rho = 0;
  Int wilf_surplus = 0;
  Int wilf_sum = 0;
  std::vector<Int> eta;
  std::optional<Int> thm_a_alpha;
  std::optional<Int> thm_b_alpha;
  bool two_nu = false;
  bool two_nu_q = false;
  bool small_gap = false;
  bool gap6_q = false;
  bool small_m = false;
  bool small_nu = false;
  bool small_q = false;
  bool covered = false;

  friend bool operator==(const SemigroupRecord&, const SemigroupRecord&) = default;
};

inline constexpr std::array<std::string_view, 23> kRecordFields = {
    "gens",     "m",        "nu",        "f",      "c",       "genus",    "n",       "t",
    "q",        "rho",      "wilf_surplus", "wilf_sum", "eta", "thm_a_alpha", "thm_b_alpha", "two_nu",
    "two_nu_q", "small_gap", "gap6_q",   "small_m", "small_nu", "small_q", "covered",
};

/// Builds the record for S. Throws RecordInconsistent if the two forms of
/// the Wilf surplus disagree.
[[nodiscard]] inline SemigroupRecord make_record(const NumericalSemigroup& s) {
  const AperyDecomposition ap = apery_set(s, s.multiplicity());
  const IntervalProfile p = interval_profile(s, ap);
  const ConditionReport r = evaluate_conditions(s, ap);
  if (p.wilf_surplus != p.wilf_sum)
    throw Error(Errc::RecordInconsistent, "wilf_surplus " + std::to_string(p.wilf_surplus) + " != wilf_sum " +
                                              std::to_string(p.wilf_sum) + " for <" +
                                              detail::join(s.minimal_generators()) + ">");
  SemigroupRecord rec;
  rec.gens = s.minimal_generators();
  rec.m = s.multiplicity();
  rec.nu = s.embedding_dimension();
  rec.f = s.frobenius();
  rec.c = s.conductor();
  rec.genus = s.genus();
  rec.n = s.sporadic_count();
  // For N the maximal Apery subset is {0}, i.e. one "pseudo-Frobenius" -1.
  rec.t = static_cast<Int>(ap.max_ap.size());
  rec.q = p.q;
  rec.rho = p.rho;
  rec.wilf_surplus = p.wilf_surplus;
  rec.wilf_sum = p.wilf_sum;
  rec.eta = p.eta_apery;
  rec.thm_a_alpha = r.thm_a;
  rec.thm_b_alpha = r.thm_b;
  rec.two_nu = r.two_nu;
  rec.two_nu_q = r.two_nu_q;
  rec.small_gap = r.small_gap;
  rec.gap6_q = r.gap6_q;
  rec.small_m = r.small_m;
  rec.small_nu = r.small_nu;
  rec.small_q = r.small_q;
  rec.covered = r.covered;
  return rec;
}

[[nodiscard]] inline nlohmann::ordered_json to_json(const SemigroupRecord& r) {
  nlohmann::ordered_json j;
  const auto opt = [](const std::optional<Int>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(); };
  j["gens"] = r.gens;
  j["m"] = r.m;
  j["nu"] = r.nu;
  j["f"] = r.f;
  j["c"] = r.c;
  j["genus"] = r.genus;
  j["n"] = r.n;
  j["t"] = r.t;
  j["q"] = r.q;
  j["rho"] = r.rho;
  j["wilf_surplus"] = r.wilf_surplus;
  j["wilf_sum"] = r.wilf_sum;
  j["eta"] = r.eta;
  j["thm_a_alpha"] = opt(r.thm_a_alpha);
  j["thm_b_alpha"] = opt(r.thm_b_alpha);
  j["two_nu"] = r.two_nu;
  j["two_nu_q"] = r.two_nu_q;
  j["small_gap"] = r.small_gap;
  j["gap6_q"] = r.gap6_q;
  j["small_m"] = r.small_m;
  j["small_nu"] = r.small_nu;
  j["small_q"] = r.small_q;
  j["covered"] = r.covered;
  return j;
}

[[nodiscard]] inline SemigroupRecord record_from_json(const nlohmann::json& j) {
  SemigroupRecord r;
  const auto opt = [&](const char* key) -> std::optional<Int> {
    const auto& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<Int>();
  };
  j.at("gens").get_to(r.gens);
  j.at("m").get_to(r.m);
  j.at("nu").get_to(r.nu);
  j.at("f").get_to(r.f);
  j.at("c").get_to(r.c);
  j.at("genus").get_to(r.genus);
  j.at("n").get_to(r.n);
  j.at("t").get_to(r.t);
  j.at("q").get_to(r.q);
  j.at("rho").get_to(r.rho);
  j.at("wilf_surplus").get_to(r.wilf_surplus);
  j.at("wilf_sum").get_to(r.wilf_sum);
  j.at("eta").get_to(r.eta);
  r.thm_a_alpha = opt("thm_a_alpha");
  r.thm_b_alpha = opt("thm_b_alpha");
  j.at("two_nu").get_to(r.two_nu);
  j.at("two_nu_q").get_to(r.two_nu_q);
  j.at("small_gap").get_to(r.small_gap);
  j.at("gap6_q").get_to(r.gap6_q);
  j.at("small_m").get_to(r.small_m);
  j.at("small_nu").get_to(r.small_nu);
  j.at("small_q").get_to(r.small_q);
  j.at("covered").get_to(r.covered);
  return r;
}

inline constexpr char kCsvSeparator = ';';

[[nodiscard]] inline std::string csv_header() {
  std::string out;
  for (std::size_t i = 0; i < kRecordFields.size(); ++i) {
    if (i != 0) out += kCsvSeparator;
    out += kRecordFields[i];
  }
  return out;
}

// List-valued fields are ';'-joined inside double quotes, so a standard
// CSV reader splits the row correctly on the same separator.
[[nodiscard]] inline std::string to_csv_row(const SemigroupRecord& r) {
  std::string out;
  const auto field = [&](const std::string& v) {
    if (!out.empty()) out += kCsvSeparator;
    out += v;
  };
  const auto list = [](const std::vector<Int>& v) { return "\"" + detail::join(v, ";") + "\""; };
  const auto num = [](Int v) { return std::to_string(v); };
  const auto opt = [](const std::optional<Int>& v) { return v ? std::to_string(*v) : std::string(); };
  const auto flag = [](bool v) { return std::string(v ? "true" : "false"); };
  field(list(r.gens));
  field(num(r.m));
  field(num(r.nu));
  field(num(r.f));
  field(num(r.c));
  field(num(r.genus));
  field(num(r.n));
  field(num(r.t));
  field(num(r.q));
  field(num(r.rho));
  field(num(r.wilf_surplus));
  field(num(r.wilf_sum));
  field(list(r.eta));
  field(opt(r.thm_a_alpha));
  field(opt(r.thm_b_alpha));
  field(flag(r.two_nu));
  field(flag(r.two_nu_q));
  field(flag(r.small_gap));
  field(flag(r.gap6_q));
  field(flag(r.small_m));
  field(flag(r.small_nu));
  field(flag(r.small_q));
  field(flag(r.covered));
  return out;
}

}  // namespace nsg
