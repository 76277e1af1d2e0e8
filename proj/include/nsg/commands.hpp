#pragma once

// Implementations of the `nsg` subcommands. Each returns the process exit
// code and writes to the supplied streams, so tests drive them directly.
//
// Exit codes: 0 success, 1 verification counterexample, 2 usage or input
// error, 3 I/O error.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/conditions.hpp"
#include "nsg/coverage.hpp"
#include "nsg/enumeration.hpp"
#include "nsg/error.hpp"
#include "nsg/intervals.hpp"
#include "nsg/record.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/verify.hpp"

namespace nsg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Split depth used when a sweep runs on more than one worker.
[[nodiscard]] constexpr int parallel_split_depth(int max_genus) noexcept { return std::min(6, max_genus); }

[[nodiscard]] inline std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view tok = text.substr(pos, end - pos);
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(Errc::InvalidArgument, "cannot parse integer '" + std::string(tok) + "'");
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

/// Applies one `--filter` term: multiplicity=K, m-minus-nu=K, covered,
/// uncovered.
inline void apply_filter(std::string_view term, EnumerationConfig& config) {
  const auto eq = term.find('=');
  const std::string_view key = term.substr(0, eq);
  const auto value = [&]() -> Int {
    if (eq == std::string_view::npos) throw Error(Errc::InvalidArgument, "filter '" + std::string(term) + "' needs a value");
    const auto list = parse_int_list(term.substr(eq + 1));
    if (list.size() != 1) throw Error(Errc::InvalidArgument, "filter '" + std::string(term) + "' takes one value");
    return list.front();
  };
  if (key == "multiplicity" || key == "m") {
    config.multiplicity = value();
  } else if (key == "m-minus-nu") {
    config.m_minus_nu = value();
  } else if (key == "covered" && eq == std::string_view::npos) {
    config.coverage = CoverageFilter::CoveredOnly;
  } else if (key == "uncovered" && eq == std::string_view::npos) {
    config.coverage = CoverageFilter::UncoveredOnly;
  } else {
    throw Error(Errc::InvalidArgument, "unknown filter '" + std::string(term) + "'");
  }
}

namespace detail {

inline std::string bracket(const std::vector<Int>& v) { return "[" + nsg::detail::join(v, ", ") + "]"; }

inline std::string yes_no(bool v) { return v ? "[x]" : "[ ]"; }

inline void render_text(const NumericalSemigroup& s, const SemigroupRecord& rec, std::ostream& out) {
  const AperyDecomposition ap = apery_set(s, s.multiplicity());
  const IntervalProfile p = interval_profile(s, ap);
  const Int m = rec.m;
  const Int nu = rec.nu;
  const Int q = rec.q;

  out << "S = <" << nsg::detail::join(rec.gens) << ">\n";
  out << "m = " << m << ", nu = " << nu << ", f = " << rec.f << ", c = " << rec.c << ", genus = " << rec.genus
      << ", n = " << rec.n << ", t = " << rec.t << "\n";
  out << "Ap(S," << m << "):";
  for (std::size_t i = 0; i < ap.size(); ++i) out << (i == 0 ? " " : ", ") << "w_" << i << " = " << ap[i];
  out << "\n";
  out << "min(Ap) = " << bracket(ap.min_ap) << ", max(Ap) = " << bracket(ap.max_ap) << "\n";
  out << "q = " << q << ", rho = " << rec.rho << "\n";
  out << "n_k = " << bracket(p.n_k) << "\n";
  out << "eta = " << bracket(rec.eta) << "\n";
  out << "nu*n - c = " << rec.wilf_surplus << "\n";
  out << "sum_j eta_j*(j*nu - m) + rho = " << rec.wilf_sum << "\n";
  out << "Wilf: " << (rec.wilf_surplus >= 0 ? "holds" : "FAILS") << "\n";
  out << "conditions:\n";
  const auto cmp = [](const Comparison& c) {
    return std::to_string(c.lhs) + (c.holds() ? " >= " : " < ") + std::to_string(c.rhs);
  };
  out << "  " << yes_no(rec.thm_a_alpha.has_value()) << " thm_a";
  if (rec.thm_a_alpha) out << " alpha = " << *rec.thm_a_alpha << ", (2q+alpha-3)nu vs qm: " << cmp(thm_a_bound(q, nu, m, *rec.thm_a_alpha));
  out << "\n";
  out << "  " << yes_no(rec.thm_b_alpha.has_value()) << " thm_b";
  if (rec.thm_b_alpha) out << " alpha = " << *rec.thm_b_alpha << ", (alpha+3)nu vs 3m: " << cmp(thm_b_bound(nu, m, *rec.thm_b_alpha));
  out << "\n";
  out << "  " << yes_no(rec.two_nu) << " two_nu: 2nu vs m: " << cmp({2 * nu, m}) << "\n";
  out << "  " << yes_no(rec.two_nu_q) << " two_nu_q";
  if (q >= 1) out << ": (2q+1)nu vs qm: " << cmp(two_nu_q_bound(q, nu, m));
  out << "\n";
  out << "  " << yes_no(rec.small_gap) << " small_gap: m - nu = " << m - nu << "\n";
  out << "  " << yes_no(rec.gap6_q) << " gap6_q\n";
  out << "  " << yes_no(rec.small_m) << " small_m: m = " << m << "\n";
  out << "  " << yes_no(rec.small_nu) << " small_nu: nu = " << nu << "\n";
  out << "  " << yes_no(rec.small_q) << " small_q: q = " << q << "\n";
  out << "covered: " << (rec.covered ? "yes" : "no") << "\n";
}

}  // namespace detail

inline int cmd_analyze(const std::vector<Int>& gens, std::string_view format, std::ostream& out, std::ostream& err) {
  try {
    if (format != "json" && format != "text") throw Error(Errc::InvalidArgument, "unknown format '" + std::string(format) + "'");
    const NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
    const SemigroupRecord rec = make_record(s);
    if (format == "json")
      out << to_json(rec).dump() << "\n";
    else
      detail::render_text(s, rec, out);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

/// Streams one record per visited semigroup. Returns the row count.
inline std::uint64_t write_records(const EnumerationConfig& config, std::string_view format, std::ostream& sink) {
  std::uint64_t rows = 0;
  const bool csv = format == "csv";
  if (csv) sink << csv_header() << "\n";
  enumerate(config, [&](const NumericalSemigroup& s) {
    const SemigroupRecord rec = make_record(s);
    if (csv)
      sink << to_csv_row(rec) << "\n";
    else
      sink << to_json(rec).dump() << "\n";
    ++rows;
  });
  return rows;
}

inline int cmd_enumerate(const EnumerationConfig& config, const std::string& path, std::string_view format,
                         std::ostream& out, std::ostream& err) {
  try {
    if (format != "csv" && format != "jsonl") throw Error(Errc::InvalidArgument, "unknown format '" + std::string(format) + "'");
    nsg::detail::validate_genus_bound(config.max_genus);
    std::uint64_t rows = 0;
    if (path.empty() || path == "-") {
      rows = write_records(config, format, out);
      out.flush();
      if (!out) {
        err << "error: failed writing to standard output\n";
        return kExitIo;
      }
    } else {
      std::ofstream file(path, std::ios::binary | std::ios::trunc);
      if (!file) {
        err << "error: cannot open '" << path << "' for writing\n";
        return kExitIo;
      }
      rows = write_records(config, format, file);
      file.close();
      if (!file) {
        err << "error: failed writing '" << path << "'\n";
        return kExitIo;
      }
    }
    err << "rows: " << rows << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

inline void print_verification(const VerificationSummary& v, int max_genus, std::ostream& out) {
  out << "verified " << v.semigroups << " semigroups of genus <= " << max_genus << "\n";
  out << std::left << std::setw(24) << "check" << std::right << std::setw(12) << "passed" << std::setw(10) << "failed"
      << "\n";
  for (std::size_t i = 0; i < kCheckCount; ++i)
    out << std::left << std::setw(24) << kCheckNames[i] << std::right << std::setw(12) << v.passed[i] << std::setw(10)
        << v.failed[i] << "\n";
  out << "violations: " << v.violations() << "\n";
}

inline int cmd_verify(int max_genus, int jobs, std::ostream& out, std::ostream& err) {
  try {
    nsg::detail::validate_genus_bound(max_genus);
    const VerificationSummary v =
        jobs > 1 ? verify_tree(max_genus, parallel_split_depth(max_genus), jobs) : verify_tree(max_genus);
    print_verification(v, max_genus, out);
    if (!v.ok()) {
      const auto& ce = *v.first_failure;
      out << "counterexample: <" << nsg::detail::join(ce.gens) << "> (genus " << ce.genus << ") fails "
          << kCheckNames[static_cast<std::size_t>(ce.check)] << "\n";
      return kExitCounterexample;
    }
    out << "result: all checks passed\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

inline void print_coverage(const CoverageSummary& c, int max_genus, std::ostream& out) {
  out << "coverage over " << c.semigroups << " semigroups of genus <= " << max_genus << "\n";
  out << std::left << std::setw(14) << "condition" << std::right << std::setw(12) << "count" << "\n";
  for (std::size_t i = 0; i < kConditionCount; ++i)
    out << std::left << std::setw(14) << kConditionNames[i] << std::right << std::setw(12) << c.satisfied[i] << "\n";
  out << std::left << std::setw(14) << "covered" << std::right << std::setw(12) << c.covered << "\n";
  out << std::left << std::setw(14) << "uncovered" << std::right << std::setw(12) << c.uncovered << "\n";
  out << "uncovered satisfying Wilf: " << c.uncovered_wilf_ok << " of " << c.uncovered << "\n";
}

inline int cmd_coverage(int max_genus, int jobs, std::ostream& out, std::ostream& err) {
  try {
    nsg::detail::validate_genus_bound(max_genus);
    const CoverageSummary c =
        jobs > 1 ? coverage_tree(max_genus, parallel_split_depth(max_genus), jobs) : coverage_tree(max_genus);
    print_coverage(c, max_genus, out);
    if (c.wilf_failures != 0) {
      out << "Wilf failures: " << c.wilf_failures << "\n";
      return kExitCounterexample;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace nsg::cli
