#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "xch/error.hpp"
#include "xch/problem.hpp"
#include "xch/report.hpp"

namespace xch {

inline constexpr std::size_t default_budget = 200000;

struct RunOptions {
  std::string object;   // empty: every applicable object (verify only)
  std::string what;     // hh, hc, hbar, hhnaive, xihc, relhc
  std::string theorem;  // connes, five-term, excision, relat, connection, corollary-corx, lemma-3.7, beta-gamma
  std::optional<std::size_t> max_degree;
  bool bases = false;
  std::size_t budget = default_budget;
};

// Each call fills the report including its exit code; library errors are
// caught and recorded.
Report run_validate(const Problem& p, const std::string& file);
Report run_compute(const Problem& p, const std::string& file, const RunOptions& opt);
Report run_verify(const Problem& p, const std::string& file, const RunOptions& opt);

// Every task of the file in order, concatenated into one report. The exit
// code is the first nonzero task exit code.
Report run_tasks(const Problem& p, const std::string& file, std::size_t budget);

// Report for a file that could not be loaded.
Report parse_failure(const std::string& command, const std::string& file, const ParseError& e);

// Records the exception in the report and sets the exit code.
void record_error(Report& r, const std::exception& e);

}  // namespace xch
