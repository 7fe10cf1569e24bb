#include "xch/session.hpp"

#include <algorithm>
#include <functional>

#include "xch/error.hpp"

namespace xch {

namespace {

std::string term_text(const Rational& c, const std::string& label, bool first) {
  std::string sign = sgn(c) < 0 ? "-" : "+";
  Rational a = abs(c);
  std::string coef = a == 1 ? "" : to_string(a) + "*";
  std::string head = first ? (sign == "-" ? "-" : "") : " " + sign + " ";
  return head + coef + "(" + label + ")";
}

// Label of a chain in terms of the cells of `ambient`, after mapping it there.
std::string chain_label(const ChainComplex& ambient, std::size_t n, const SparseVector& v) {
  std::string out;
  for (const auto& t : v) {
    out += term_text(t.value, ambient.label(n, t.index), out.empty());
  }
  return out.empty() ? "0" : out;
}

void check_budget(const CrossedModule& x, Flavor flavor, std::size_t hi, std::size_t budget) {
  const std::size_t est = estimate_dimension(x, flavor, hi);
  if (est > budget) {
    throw BudgetExceeded("estimated " + std::to_string(est) + " coordinates in one degree of " + flavor_name(flavor) +
                             "(" + x.name + ") through degree " + std::to_string(hi) + ", budget is " +
                             std::to_string(budget),
                         est, budget);
  }
}

void require_valid(const CrossedModule& x) {
  const auto v = validate_crossed_module(x);
  if (!v.ok()) throw MathError(x.name + " is not a valid crossed module: " + v.failures.front());
}

void require_rational(const Problem& p, const std::string& what) {
  if (!p.field.rational()) throw FieldError(what + " requires characteristic zero");
}

std::optional<Flavor> flavor_of(const std::string& what) {
  if (what == "hh") return Flavor::CC2;
  if (what == "hc") return Flavor::CC;
  if (what == "hbar") return Flavor::Cbar;
  if (what == "hhnaive") return Flavor::C;
  return std::nullopt;
}

HomologyTable table_of(const std::string& object, const std::string& what, std::size_t first,
                       const std::vector<Homology>& hs, bool bases, const ChainComplex& ambient,
                       const std::function<SparseVector(std::size_t, const SparseVector&)>& to_ambient) {
  HomologyTable t{object, what, first, dims_of(hs), {}};
  if (bases) {
    for (const auto& h : hs) {
      std::vector<std::string> labels;
      for (const auto& z : h.representatives()) {
        labels.push_back(chain_label(ambient, h.degree(), to_ambient(h.degree(), z)));
      }
      t.bases.push_back(std::move(labels));
    }
  }
  return t;
}

std::vector<std::size_t> dims_mod_p(const ChainComplex& c, std::size_t n_max, std::uint64_t p) {
  std::vector<std::size_t> ranks(c.hi + 1);
  for (std::size_t n = 0; n <= c.hi; ++n) ranks[n] = rank_mod_p(c.diffs[n], p);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(c.dims[n] - ranks[n] - ranks[n + 1]);
  return out;
}

// The pair (A, Im rho) of a crossed module with injective rho.
Subspace ideal_of(const CrossedModule& x) {
  if (rank(x.rho) != x.R.dim()) throw MathError(x.name + ": rho is not injective, so it is not an inclusion");
  return image(x.rho);
}

bool applicable(const std::string& theorem, const CrossedModule& x) {
  if (theorem == "relat" || theorem == "corollary-corx") return rank(x.rho) == x.R.dim();
  return true;
}

std::size_t default_degree(const std::string& theorem) {
  if (theorem == "connes" || theorem == "corollary-corx") return 3;
  return 2;
}

}  // namespace

void record_error(Report& r, const std::exception& e) {
  r.error = e.what();
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    r.error_kind = "parse";
    r.exit_code = 2;
    if (pe->line() > 0) {
      r.error_line = pe->line();
      r.error_column = pe->column();
    }
  } else if (const auto* be = dynamic_cast<const BudgetExceeded*>(&e)) {
    r.error_kind = "budget";
    r.exit_code = 3;
    r.estimate = be->estimate();
    r.budget = be->budget();
  } else if (dynamic_cast<const FieldError*>(&e)) {
    r.error_kind = "field";
    r.exit_code = 1;
  } else if (dynamic_cast<const WindowError*>(&e)) {
    r.error_kind = "window";
    r.exit_code = 1;
  } else if (dynamic_cast<const MathError*>(&e)) {
    r.error_kind = "math";
    r.exit_code = 1;
  } else {
    r.error_kind = "internal";
    r.exit_code = 1;
  }
}

Report parse_failure(const std::string& command, const std::string& file, const ParseError& e) {
  Report r;
  r.command = command;
  r.file = file;
  r.field = "";
  record_error(r, e);
  return r;
}

Report run_validate(const Problem& p, const std::string& file) {
  Report r;
  r.command = "validate";
  r.file = file;
  r.field = p.field.text;
  for (const auto& a : p.algebras) r.validations.push_back({"algebra", a.name, validate_algebra(a).failures});
  for (const auto& x : p.crossed_modules) {
    r.validations.push_back({"crossed_module", x.name, validate_crossed_module(x).failures});
  }
  for (const auto& m : p.morphisms) r.validations.push_back({"morphism", m.name, validate_morphism(m).failures});
  for (const auto& e : p.extensions) r.validations.push_back({"extension", e.name, validate_extension(e).failures});
  for (const auto& c : p.construction_errors) r.validations.push_back({"construction", c.substr(0, c.find(':')), {c}});
  for (const auto& v : r.validations) {
    if (!v.failures.empty()) r.exit_code = 1;
  }
  return r;
}

Report run_compute(const Problem& p, const std::string& file, const RunOptions& opt) {
  Report r;
  r.command = "compute";
  r.file = file;
  r.field = p.field.text;
  const std::size_t n_max = opt.max_degree.value_or(3);
  r.task = {{"object", opt.object}, {"what", opt.what}, {"max_degree", std::to_string(n_max)}};
  if (opt.bases) r.task.emplace_back("bases", "true");
  try {
    const CrossedModule* x = p.find_crossed_module(opt.object);
    const FiniteAlgebra* a = x ? nullptr : p.find_algebra(opt.object);
    if (!x && !a) throw ParseError("unknown object \"" + opt.object + "\"");
    const auto flavor = flavor_of(opt.what);
    if (!flavor && opt.what != "xihc" && opt.what != "relhc") {
      throw ParseError("unknown homology \"" + opt.what + "\" (expected hh, hc, hbar, hhnaive, xihc or relhc)");
    }
    if (opt.bases && !p.field.rational()) throw FieldError("representative bases require characteristic zero");
    if (x) require_valid(*x);
    const CrossedModule probe = x ? *x : make_zero_xmod(*a, a->name);
    auto identity_push = [](std::size_t, const SparseVector& v) { return v; };

    if (flavor) {
      check_budget(probe, *flavor, n_max + 1, opt.budget);
      const ChainComplex c = x ? xmod_complex(*x, *flavor, n_max + 1) : algebra_complex(*a, *flavor, n_max + 1);
      if (p.field.rational()) {
        r.tables.push_back(table_of(opt.object, opt.what, 0, homology_range(c, 0, n_max), opt.bases, c, identity_push));
      } else {
        r.tables.push_back(HomologyTable{opt.object, opt.what, 0, dims_mod_p(c, n_max, p.field.prime), {}});
      }
      return r;
    }

    require_rational(p, opt.what);
    if (!x) throw MathError(opt.what + " needs a crossed module, \"" + opt.object + "\" is an algebra");
    check_budget(*x, Flavor::CC, n_max + 2, opt.budget);
    if (opt.what == "xihc") {
      ChainMap section;
      const ComplexSES ses = base_quotient_ses(*x, Flavor::CC, n_max + 2, &section);
      const auto hs = homology_range(ses.right, 1, n_max + 1);
      auto push = [&](std::size_t n, const SparseVector& v) { return section.maps[n].apply(v); };
      r.tables.push_back(table_of(opt.object, opt.what, 0, hs, opt.bases, ses.mid, push));
    } else {
      const Subspace ideal = ideal_of(*x);
      const auto rel = relative_hc(x->A, ideal, n_max);
      const auto cc_a = algebra_complex(x->A, Flavor::CC, n_max + 1);
      // Kernel coordinates are pushed into CC(A) for labelling.
      std::vector<SparseMatrix> incl;
      if (opt.bases) {
        const auto q = quotient_algebra(x->A, ideal);
        const auto f = induced_chain_map({q.projection}, cc_a, algebra_complex(q.algebra, Flavor::CC, n_max + 1));
        incl = kernel_complex(f, cc_a).inclusion.maps;
      }
      auto push = [&](std::size_t n, const SparseVector& v) { return incl[n].apply(v); };
      r.tables.push_back(table_of(opt.object, opt.what, 0, rel.groups, opt.bases, cc_a, push));
    }
  } catch (const Error& e) {
    record_error(r, e);
  }
  return r;
}

Report run_verify(const Problem& p, const std::string& file, const RunOptions& opt) {
  Report r;
  r.command = "verify";
  r.file = file;
  r.field = p.field.text;
  const std::string& th = opt.theorem;
  const std::size_t n_max = opt.max_degree.value_or(default_degree(th));
  r.task = {{"theorem", th}, {"object", opt.object.empty() ? "*" : opt.object}};
  if (th != "five-term" && th != "beta-gamma") r.task.emplace_back("max_degree", std::to_string(n_max));
  try {
    static const std::vector<std::string> known{"connes",         "five-term", "excision",  "relat",
                                                "connection",     "corollary-corx", "lemma-3.7", "beta-gamma"};
    if (std::find(known.begin(), known.end(), th) == known.end()) {
      throw ParseError("unknown theorem \"" + th +
                       "\" (expected connes, five-term, excision, relat, connection, corollary-corx, lemma-3.7 or "
                       "beta-gamma)");
    }
    require_rational(p, "verification");

    if (th == "excision") {
      std::vector<const XModExtension*> targets;
      if (!opt.object.empty()) {
        for (const auto& c : p.construction_errors) {
          if (c.rfind(opt.object + ":", 0) == 0) throw MathError(c);
        }
        const XModExtension* e = p.find_extension(opt.object);
        if (!e) throw ParseError("unknown extension \"" + opt.object + "\"");
        targets.push_back(e);
      } else {
        for (const auto& e : p.extensions) targets.push_back(&e);
        if (targets.empty()) throw MathError("excision needs a declared extension with splittings gamma and delta");
      }
      for (const auto* e : targets) {
        check_budget(e->incl.target, Flavor::CC2, n_max + 1, opt.budget);
        check_budget(e->incl.source, Flavor::Cbar, n_max + 2, opt.budget);
        r.verifications.push_back({e->name, verify_excision(*e, n_max)});
      }
    } else {
      std::vector<const CrossedModule*> targets;
      if (!opt.object.empty()) {
        const CrossedModule* x = p.find_crossed_module(opt.object);
        if (!x) throw ParseError("unknown crossed module \"" + opt.object + "\"");
        targets.push_back(x);
      } else {
        for (const auto& x : p.crossed_modules) {
          if (validate_crossed_module(x).ok() && applicable(th, x)) targets.push_back(&x);
        }
      }
      if (targets.empty()) throw MathError("no crossed module in the file satisfies the hypotheses of " + th);
      for (const auto* x : targets) {
        require_valid(*x);
        TheoremReport rep;
        if (th == "connes") {
          check_budget(*x, Flavor::CC, n_max + 1, opt.budget);
          rep = verify_connes(*x, n_max);
        } else if (th == "five-term") {
          check_budget(*x, Flavor::CC, 3, opt.budget);
          rep = verify_five_term(*x);
        } else if (th == "beta-gamma") {
          check_budget(*x, Flavor::CC, 2, opt.budget);
          rep = verify_beta_gamma(*x);
        } else if (th == "connection") {
          check_budget(*x, Flavor::CC, n_max + 2, opt.budget);
          rep = verify_connection(*x, n_max);
        } else if (th == "corollary-corx") {
          check_budget(*x, Flavor::CC, n_max + 1, opt.budget);
          rep = verify_collapse(*x, n_max);
        } else if (th == "lemma-3.7") {
          check_budget(*x, Flavor::C, n_max + 1, opt.budget);
          rep = verify_tensor_homotopy(*x, n_max, n_max);
        } else {
          check_budget(*x, Flavor::CC, n_max + 2, opt.budget);
          rep = verify_relat(x->A, ideal_of(*x), n_max);
        }
        r.verifications.push_back({x->name, std::move(rep)});
      }
    }
    for (const auto& v : r.verifications) {
      if (!v.report.passed()) r.exit_code = 1;
    }
  } catch (const Error& e) {
    record_error(r, e);
  }
  return r;
}

Report run_tasks(const Problem& p, const std::string& file, std::size_t budget) {
  Report r;
  r.command = "run";
  r.file = file;
  r.field = p.field.text;
  r.task = {{"tasks", std::to_string(p.tasks.size())}};
  for (const auto& t : p.tasks) {
    RunOptions opt;
    opt.object = t.object;
    opt.what = t.what;
    opt.theorem = t.theorem;
    opt.max_degree = t.max_degree;
    opt.budget = budget;
    Report one = t.command == "compute" ? run_compute(p, file, opt) : run_verify(p, file, opt);
    for (auto& h : one.tables) r.tables.push_back(std::move(h));
    for (auto& v : one.verifications) r.verifications.push_back(std::move(v));
    if (r.exit_code == 0 && one.exit_code != 0) {
      r.exit_code = one.exit_code;
      r.error_kind = one.error_kind;
      r.error = one.error;
      r.estimate = one.estimate;
      r.budget = one.budget;
    }
  }
  return r;
}

}  // namespace xch
