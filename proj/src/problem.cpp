#include "xch/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "xch/error.hpp"

namespace xch {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const json& member(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

std::string string_field(const json& obj, const std::string& key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

std::size_t index_value(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Rational scalar(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(std::to_string(v.get<std::int64_t>()));
  if (v.is_number_unsigned()) return Rational(std::to_string(v.get<std::uint64_t>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a string \"p/q\"");
}

const json& array_field(const json& obj, const std::string& key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_array()) fail(path + "." + key, "expected an array");
  return v;
}

std::vector<SparseVector> read_vectors(const json& arr, std::size_t dim, const std::string& path) {
  std::vector<SparseVector> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != dim) fail(p, "expected a vector of length " + std::to_string(dim));
    std::vector<Rational> dense;
    for (std::size_t j = 0; j < dim; ++j) dense.push_back(scalar(arr[i][j], p + "[" + std::to_string(j) + "]"));
    out.push_back(from_dense(dense));
  }
  return out;
}

SparseMatrix read_matrix(const json& obj, const std::string& key, std::size_t rows, std::size_t cols,
                         const std::string& path) {
  const json& arr = array_field(obj, key, path);
  const std::string p = path + "." + key;
  if (arr.size() != rows) {
    fail(p, "expected " + std::to_string(rows) + " rows of length " + std::to_string(cols) + ", got " +
                std::to_string(arr.size()) + " rows");
  }
  return SparseMatrix::from_rows(cols, read_vectors(arr, cols, p));
}

// [i, j, k, scalar] entries of a bilinear map.
Bilinear read_bilinear(const json& obj, const std::string& key, std::size_t l, std::size_t r, std::size_t o,
                       const std::string& path, bool optional = false) {
  if (optional && !obj.contains(key)) return Bilinear(l, r, o);
  const json& arr = array_field(obj, key, path);
  std::vector<StructureConstant> constants;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t n = 0; n < arr.size(); ++n) {
    const std::string p = path + "." + key + "[" + std::to_string(n) + "]";
    const json& t = arr[n];
    if (!t.is_array() || t.size() != 4) fail(p, "expected [i, j, k, scalar]");
    const std::size_t i = index_value(t[0], p + "[0]");
    const std::size_t j = index_value(t[1], p + "[1]");
    const std::size_t k = index_value(t[2], p + "[2]");
    if (i >= l || j >= r || k >= o) {
      fail(p, "index out of range (bounds " + std::to_string(l) + ", " + std::to_string(r) + ", " +
                  std::to_string(o) + ")");
    }
    if (!seen.emplace(i, j, k).second) fail(p, "duplicate entry");
    constants.push_back({i, j, k, scalar(t[3], p + "[3]")});
  }
  return Bilinear::from_constants(l, r, o, constants);
}

std::string checked_name(const json& obj, const std::string& path, std::set<std::string>& used) {
  std::string name = string_field(obj, "name", path);
  if (name.empty()) fail(path + ".name", "empty name");
  if (!used.insert(name).second) fail(path + ".name", "duplicate name \"" + name + "\"");
  return name;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const json* optional_array(const json& root, const std::string& key) {
  auto it = root.find(key);
  if (it == root.end()) return nullptr;
  if (!it->is_array()) fail(key, "expected an array");
  return &*it;
}

}  // namespace

FieldSpec parse_field(const std::string& text) {
  if (text == "Q") return FieldSpec{};
  if (text.rfind("Fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("field: expected \"Fp:<prime>\"");
    }
    mpz_class p(digits);
    if (p < 2 || p >= mpz_class("9223372036854775808") || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
      throw ParseError("field: " + digits + " is not a prime below 2^63");
    }
    return FieldSpec{text, static_cast<std::uint64_t>(std::stoull(digits))};
  }
  throw ParseError("field: expected \"Q\" or \"Fp:<prime>\", got \"" + text + "\"");
}

const FiniteAlgebra* Problem::find_algebra(const std::string& name) const {
  for (const auto& a : algebras) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

const CrossedModule* Problem::find_crossed_module(const std::string& name) const {
  for (const auto& x : crossed_modules) {
    if (x.name == name) return &x;
  }
  return nullptr;
}

const XModMorphism* Problem::find_morphism(const std::string& name) const {
  for (const auto& m : morphisms) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

const XModExtension* Problem::find_extension(const std::string& name) const {
  for (const auto& e : extensions) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

Problem parse_problem(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(msg, line, col);
  }
  if (!root.is_object()) fail("$", "expected an object");

  Problem pr;
  if (root.contains("field")) {
    if (!root["field"].is_string()) fail("field", "expected a string");
    pr.field = parse_field(root["field"].get<std::string>());
  }
  std::set<std::string> used;

  auto algebra_ref = [&](const json& obj, const std::string& key, const std::string& path) -> const FiniteAlgebra& {
    const std::string name = string_field(obj, key, path);
    const FiniteAlgebra* a = pr.find_algebra(name);
    if (!a) fail(path + "." + key, "unknown algebra \"" + name + "\"");
    return *a;
  };

  if (const json* arr = optional_array(root, "algebras")) {
    for (std::size_t n = 0; n < arr->size(); ++n) {
      const std::string path = "algebras[" + std::to_string(n) + "]";
      const json& obj = (*arr)[n];
      if (!obj.is_object()) fail(path, "expected an object");
      std::string name = checked_name(obj, path, used);
      const json& basis_json = array_field(obj, "basis", path);
      std::vector<std::string> basis;
      std::set<std::string> labels;
      for (std::size_t i = 0; i < basis_json.size(); ++i) {
        if (!basis_json[i].is_string()) fail(path + ".basis[" + std::to_string(i) + "]", "expected a string");
        basis.push_back(basis_json[i].get<std::string>());
        if (!labels.insert(basis.back()).second) fail(path + ".basis", "duplicate label \"" + basis.back() + "\"");
      }
      if (obj.contains("dim") && index_value(obj["dim"], path + ".dim") != basis.size()) {
        fail(path + ".dim", "does not match the number of basis labels");
      }
      const std::size_t d = basis.size();
      Bilinear mul = read_bilinear(obj, "mul", d, d, d, path, true);
      pr.algebras.push_back(FiniteAlgebra{std::move(name), std::move(basis), std::move(mul)});
    }
  }

  if (const json* arr = optional_array(root, "subspaces")) {
    for (std::size_t n = 0; n < arr->size(); ++n) {
      const std::string path = "subspaces[" + std::to_string(n) + "]";
      const json& obj = (*arr)[n];
      if (!obj.is_object()) fail(path, "expected an object");
      std::string name = checked_name(obj, path, used);
      const FiniteAlgebra& a = algebra_ref(obj, "algebra", path);
      auto vectors = read_vectors(array_field(obj, "vectors", path), a.dim(), path + ".vectors");
      pr.subspaces.push_back(NamedSubspace{std::move(name), a.name, Subspace::span(a.dim(), vectors)});
    }
  }

  auto subspace_ref = [&](const json& obj, const std::string& key, const std::string& path,
                          const FiniteAlgebra& a) -> const Subspace& {
    const std::string name = string_field(obj, key, path);
    for (const auto& s : pr.subspaces) {
      if (s.name != name) continue;
      if (s.algebra != a.name) fail(path + "." + key, "subspace \"" + name + "\" lives in " + s.algebra);
      return s.space;
    }
    fail(path + "." + key, "unknown subspace \"" + name + "\"");
  };

  if (const json* arr = optional_array(root, "crossed_modules")) {
    for (std::size_t n = 0; n < arr->size(); ++n) {
      const std::string path = "crossed_modules[" + std::to_string(n) + "]";
      const json& obj = (*arr)[n];
      if (!obj.is_object()) fail(path, "expected an object");
      std::string name = checked_name(obj, path, used);
      const std::string kind = string_field(obj, "kind", path);
      try {
        if (kind == "inclusion") {
          const FiniteAlgebra& a = algebra_ref(obj, "algebra", path);
          const Subspace& ideal = subspace_ref(obj, "ideal", path, a);
          if (auto bad = ideal_violation(a, ideal)) throw MathError("not a two-sided ideal: " + *bad);
          pr.crossed_modules.push_back(make_inclusion_xmod(a, ideal, name));
        } else if (kind == "identity") {
          pr.crossed_modules.push_back(make_identity_xmod(algebra_ref(obj, "algebra", path), name));
        } else if (kind == "zero") {
          pr.crossed_modules.push_back(make_zero_xmod(algebra_ref(obj, "algebra", path), name));
        } else if (kind == "bimodule") {
          const FiniteAlgebra& a = algebra_ref(obj, "acting", path);
          const FiniteAlgebra& m = algebra_ref(obj, "module", path);
          AlgebraAction act{a, m, read_bilinear(obj, "left", a.dim(), m.dim(), m.dim(), path),
                            read_bilinear(obj, "right", m.dim(), a.dim(), m.dim(), path)};
          pr.crossed_modules.push_back(make_bimodule_xmod(act, name));
        } else if (kind == "explicit") {
          const FiniteAlgebra& r = algebra_ref(obj, "R", path);
          const FiniteAlgebra& a = algebra_ref(obj, "A", path);
          pr.crossed_modules.push_back(CrossedModule{name, r, a, read_matrix(obj, "rho", a.dim(), r.dim(), path),
                                                     read_bilinear(obj, "left", a.dim(), r.dim(), r.dim(), path),
                                                     read_bilinear(obj, "right", r.dim(), a.dim(), r.dim(), path)});
        } else if (kind == "annihilator") {
          const FiniteAlgebra& r = algebra_ref(obj, "R", path);
          const FiniteAlgebra& a = algebra_ref(obj, "A", path);
          pr.crossed_modules.push_back(make_annihilator_xmod(r, a, read_matrix(obj, "rho", a.dim(), r.dim(), path), name));
        } else {
          fail(path + ".kind", "unknown kind \"" + kind +
                                   "\" (expected inclusion, identity, zero, bimodule, explicit or annihilator)");
        }
      } catch (const MathError& e) {
        pr.construction_errors.push_back(name + ": " + e.what());
      }
    }
  }

  auto xmod_ref = [&](const json& obj, const std::string& key, const std::string& path) -> const CrossedModule& {
    const std::string name = string_field(obj, key, path);
    const CrossedModule* x = pr.find_crossed_module(name);
    if (!x) fail(path + "." + key, "unknown or invalid crossed module \"" + name + "\"");
    return *x;
  };

  if (const json* arr = optional_array(root, "morphisms")) {
    for (std::size_t n = 0; n < arr->size(); ++n) {
      const std::string path = "morphisms[" + std::to_string(n) + "]";
      const json& obj = (*arr)[n];
      if (!obj.is_object()) fail(path, "expected an object");
      std::string name = checked_name(obj, path, used);
      const CrossedModule& s = xmod_ref(obj, "source", path);
      const CrossedModule& t = xmod_ref(obj, "target", path);
      pr.morphisms.push_back(XModMorphism{std::move(name), s, t, read_matrix(obj, "mu", t.R.dim(), s.R.dim(), path),
                                          read_matrix(obj, "nu", t.A.dim(), s.A.dim(), path)});
    }
  }

  if (const json* arr = optional_array(root, "extensions")) {
    for (std::size_t n = 0; n < arr->size(); ++n) {
      const std::string path = "extensions[" + std::to_string(n) + "]";
      const json& obj = (*arr)[n];
      if (!obj.is_object()) fail(path, "expected an object");
      std::string name = checked_name(obj, path, used);
      auto morphism_ref = [&](const std::string& key) -> const XModMorphism& {
        const std::string m = string_field(obj, key, path);
        const XModMorphism* found = pr.find_morphism(m);
        if (!found) fail(path + "." + key, "unknown morphism \"" + m + "\"");
        return *found;
      };
      const XModMorphism& incl = morphism_ref("incl");
      const XModMorphism& proj = morphism_ref("proj");
      if (incl.target.name != proj.source.name) fail(path, "incl and proj do not share the middle crossed module");
      const CrossedModule& s = incl.target;
      const CrossedModule& t = proj.target;
      if (!obj.contains("gamma") || !obj.contains("delta")) {
        pr.construction_errors.push_back(name + ": extension needs the linear splittings gamma and delta");
        continue;
      }
      pr.extensions.push_back(XModExtension{std::move(name), incl, proj,
                                            read_matrix(obj, "gamma", s.R.dim(), t.R.dim(), path),
                                            read_matrix(obj, "delta", s.A.dim(), t.A.dim(), path)});
    }
  }

  if (const json* arr = optional_array(root, "tasks")) {
    for (std::size_t n = 0; n < arr->size(); ++n) {
      const std::string path = "tasks[" + std::to_string(n) + "]";
      const json& obj = (*arr)[n];
      if (!obj.is_object()) fail(path, "expected an object");
      Task t;
      t.command = string_field(obj, "command", path);
      if (t.command != "compute" && t.command != "verify") fail(path + ".command", "expected compute or verify");
      if (obj.contains("object")) t.object = string_field(obj, "object", path);
      if (t.command == "compute") {
        t.what = string_field(obj, "what", path);
      } else {
        t.theorem = string_field(obj, "theorem", path);
      }
      if (obj.contains("max_degree")) t.max_degree = index_value(obj["max_degree"], path + ".max_degree");
      pr.tasks.push_back(std::move(t));
    }
  }

  static const std::set<std::string> known{"field",      "algebras",  "subspaces", "crossed_modules",
                                           "morphisms",  "extensions", "tasks",     "description"};
  for (const auto& [key, value] : root.items()) {
    if (!known.count(key)) fail(key, "unknown top-level field");
  }
  return pr;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

}  // namespace xch
