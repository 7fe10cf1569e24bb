#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xch/algebra.hpp"

namespace xch {

// "Q" or "Fp:<prime>".
struct FieldSpec {
  std::string text = "Q";
  std::uint64_t prime = 0;  // 0 for Q

  bool rational() const { return prime == 0; }
};

FieldSpec parse_field(const std::string& text);

struct NamedSubspace {
  std::string name;
  std::string algebra;
  Subspace space;
};

struct Task {
  std::string command;  // "compute" or "verify"
  std::string object;
  std::string what;     // compute only
  std::string theorem;  // verify only
  std::optional<std::size_t> max_degree;
};

struct Problem {
  FieldSpec field;
  std::vector<FiniteAlgebra> algebras;
  std::vector<NamedSubspace> subspaces;
  std::vector<CrossedModule> crossed_modules;
  std::vector<XModMorphism> morphisms;
  std::vector<XModExtension> extensions;
  std::vector<Task> tasks;
  // Construction failures (e.g. a declared ideal that is not one), kept so
  // that `validate` can report them next to the axiom checks.
  std::vector<std::string> construction_errors;

  const FiniteAlgebra* find_algebra(const std::string& name) const;
  const CrossedModule* find_crossed_module(const std::string& name) const;
  const XModMorphism* find_morphism(const std::string& name) const;
  const XModExtension* find_extension(const std::string& name) const;
};

// Throws ParseError with a line and column for malformed JSON, and with a
// JSON path for structural problems.
Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);

}  // namespace xch
