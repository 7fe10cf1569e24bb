#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xch/theorems.hpp"

namespace xch {

struct HomologyTable {
  std::string object;
  std::string what;
  std::size_t first_degree = 0;
  std::vector<std::size_t> dims;
  // Representative cycles per degree, as signed sums of cell labels. Empty
  // unless requested.
  std::vector<std::vector<std::string>> bases;
};

struct ObjectValidation {
  std::string kind;
  std::string name;
  std::vector<std::string> failures;
};

struct VerifyResult {
  std::string object;
  TheoremReport report;
};

struct Report {
  std::string command;
  std::string file;
  std::string field = "Q";
  std::vector<std::pair<std::string, std::string>> task;  // echo of the request
  std::vector<ObjectValidation> validations;
  std::vector<HomologyTable> tables;
  std::vector<VerifyResult> verifications;
  std::string error_kind;  // empty on success
  std::string error;
  std::optional<std::size_t> error_line;
  std::optional<std::size_t> error_column;
  std::optional<std::size_t> estimate;
  std::optional<std::size_t> budget;
  int exit_code = 0;
  std::optional<double> seconds;  // only with --timing
};

std::string render_json(const Report& r);
std::string render_text(const Report& r);

}  // namespace xch
