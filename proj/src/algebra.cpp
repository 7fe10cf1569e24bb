#include "xch/algebra.hpp"

#include <sstream>

#include "xch/error.hpp"

namespace xch {

Bilinear::Bilinear(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim)
    : left_(left_dim), right_(right_dim), out_(out_dim), table_(left_dim * right_dim) {}

Bilinear Bilinear::from_constants(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim,
                                  const std::vector<StructureConstant>& constants) {
  Bilinear b(left_dim, right_dim, out_dim);
  std::vector<std::vector<Term>> acc(left_dim * right_dim);
  for (const auto& c : constants) {
    if (c.i >= left_dim || c.j >= right_dim || c.k >= out_dim) throw MathError("structure constant index out of range");
    acc[c.i * right_dim + c.j].push_back(Term{c.k, c.value});
  }
  for (std::size_t p = 0; p < acc.size(); ++p) b.table_[p] = canonical_vector(std::move(acc[p]));
  return b;
}

SparseVector Bilinear::apply(const SparseVector& x, const SparseVector& y) const {
  std::vector<Term> acc;
  for (const auto& s : x) {
    for (const auto& t : y) {
      const Rational f = s.value * t.value;
      for (const auto& u : on_basis(s.index, t.index)) acc.push_back(Term{u.index, f * u.value});
    }
  }
  return canonical_vector(std::move(acc));
}

std::vector<StructureConstant> Bilinear::constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < left_; ++i) {
    for (std::size_t j = 0; j < right_; ++j) {
      for (const auto& t : on_basis(i, j)) out.push_back(StructureConstant{i, j, t.index, t.value});
    }
  }
  return out;
}

bool Bilinear::is_zero() const {
  for (const auto& v : table_) {
    if (!v.empty()) return false;
  }
  return true;
}

FiniteAlgebra make_algebra(std::string name, std::vector<std::string> basis,
                           const std::vector<StructureConstant>& constants) {
  const std::size_t n = basis.size();
  return FiniteAlgebra{std::move(name), std::move(basis), Bilinear::from_constants(n, n, n, constants)};
}

FiniteAlgebra zero_algebra(std::string name) { return FiniteAlgebra{std::move(name), {}, Bilinear(0, 0, 0)}; }

AlgebraAction self_action(const FiniteAlgebra& a) { return AlgebraAction{a, a, a.mul, a.mul}; }

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& f : other.failures) failures.push_back(prefix + f);
}

std::string vector_label(const SparseVector& v, const std::vector<std::string>& basis) {
  if (v.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : v) {
    Rational c = t.value;
    if (!first) {
      out << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    } else if (c == -1) {
      out << "-";
      c = 1;
    }
    if (c != 1) out << to_string(c) << "*";
    out << (t.index < basis.size() ? basis[t.index] : "#" + std::to_string(t.index));
    first = false;
  }
  return out.str();
}

namespace {

std::string witness(std::initializer_list<std::pair<std::string, std::string>> parts) {
  std::string out = "(";
  bool first = true;
  for (const auto& [k, v] : parts) {
    if (!first) out += ", ";
    out += k + "=" + v;
    first = false;
  }
  return out + ")";
}

}  // namespace

ValidationReport validate_algebra(const FiniteAlgebra& a) {
  ValidationReport report;
  const std::size_t n = a.dim();
  if (a.mul.left_dim() != n || a.mul.right_dim() != n || a.mul.out_dim() != n) {
    report.failures.push_back("multiplication table has the wrong shape");
    return report;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector& ij = a.mul.on_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const SparseVector lhs = a.multiply(ij, unit_vector(k));
        const SparseVector rhs = a.multiply(unit_vector(i), a.mul.on_basis(j, k));
        if (lhs != rhs) {
          report.failures.push_back("associativity fails at " +
                                    witness({{"x", a.basis[i]}, {"y", a.basis[j]}, {"z", a.basis[k]}}));
        }
      }
    }
  }
  return report;
}

ValidationReport validate_action(const AlgebraAction& act) {
  ValidationReport report;
  const FiniteAlgebra& A = act.acting;
  const FiniteAlgebra& R = act.acted;
  if (act.left.left_dim() != A.dim() || act.left.right_dim() != R.dim() || act.left.out_dim() != R.dim() ||
      act.right.left_dim() != R.dim() || act.right.right_dim() != A.dim() || act.right.out_dim() != R.dim()) {
    report.failures.push_back("action tensors have the wrong shape");
    return report;
  }
  auto L = [&](const SparseVector& a, const SparseVector& r) { return act.left.apply(a, r); };
  auto Rt = [&](const SparseVector& r, const SparseVector& a) { return act.right.apply(r, a); };
  auto mA = [&](const SparseVector& x, const SparseVector& y) { return A.multiply(x, y); };
  auto mR = [&](const SparseVector& x, const SparseVector& y) { return R.multiply(x, y); };
  auto fail = [&](const std::string& law, const std::string& w) { report.failures.push_back(law + " fails at " + w); };

  for (std::size_t i = 0; i < A.dim(); ++i) {
    const auto a = unit_vector(i);
    for (std::size_t j = 0; j < A.dim(); ++j) {
      const auto a2 = unit_vector(j);
      for (std::size_t k = 0; k < R.dim(); ++k) {
        const auto r = unit_vector(k);
        const auto w = witness({{"a", A.basis[i]}, {"a'", A.basis[j]}, {"r", R.basis[k]}});
        if (L(mA(a, a2), r) != L(a, L(a2, r))) fail("(aa')r = a(a'r)", w);
        if (Rt(r, mA(a, a2)) != Rt(Rt(r, a), a2)) fail("r(aa') = (ra)a'", w);
      }
    }
    for (std::size_t k = 0; k < R.dim(); ++k) {
      const auto r = unit_vector(k);
      for (std::size_t j = 0; j < A.dim(); ++j) {
        const auto a2 = unit_vector(j);
        if (Rt(L(a, r), a2) != L(a, Rt(r, a2))) {
          fail("(ar)a' = a(ra')", witness({{"a", A.basis[i]}, {"r", R.basis[k]}, {"a'", A.basis[j]}}));
        }
      }
      for (std::size_t l = 0; l < R.dim(); ++l) {
        const auto r2 = unit_vector(l);
        const auto w = witness({{"a", A.basis[i]}, {"r", R.basis[k]}, {"r'", R.basis[l]}});
        if (L(a, mR(r, r2)) != mR(L(a, r), r2)) fail("a(rr') = (ar)r'", w);
        if (mR(Rt(r, a), r2) != mR(r, L(a, r2))) fail("(ra)r' = r(ar')", w);
        if (Rt(mR(r, r2), a) != mR(r, Rt(r2, a))) fail("(rr')a = r(r'a)", w);
      }
    }
  }
  return report;
}

ValidationReport validate_homomorphism(const SparseMatrix& f, const FiniteAlgebra& from, const FiniteAlgebra& to) {
  ValidationReport report;
  if (f.rows() != to.dim() || f.cols() != from.dim()) {
    report.failures.push_back("map has shape " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                              ", expected " + std::to_string(to.dim()) + "x" + std::to_string(from.dim()));
    return report;
  }
  for (std::size_t i = 0; i < from.dim(); ++i) {
    for (std::size_t j = 0; j < from.dim(); ++j) {
      const auto lhs = f.apply(from.mul.on_basis(i, j));
      const auto rhs = to.multiply(f.apply(unit_vector(i)), f.apply(unit_vector(j)));
      if (lhs != rhs) {
        report.failures.push_back("f(xy) = f(x)f(y) fails at " + witness({{"x", from.basis[i]}, {"y", from.basis[j]}}));
      }
    }
  }
  return report;
}

FiniteAlgebra semidirect_product(const AlgebraAction& act) {
  if (!validate_action(act).ok()) throw MathError("semidirect product of an invalid action");
  const FiniteAlgebra& R = act.acted;
  const FiniteAlgebra& A = act.acting;
  const std::size_t nr = R.dim();
  const std::size_t n = nr + A.dim();
  std::vector<std::string> basis;
  for (const auto& b : R.basis) basis.push_back("(" + b + ",0)");
  for (const auto& b : A.basis) basis.push_back("(0," + b + ")");
  std::vector<StructureConstant> constants;
  for (const auto& c : R.mul.constants()) constants.push_back({c.i, c.j, c.k, c.value});
  for (const auto& c : act.left.constants()) constants.push_back({nr + c.i, c.j, c.k, c.value});
  for (const auto& c : act.right.constants()) constants.push_back({c.i, nr + c.j, c.k, c.value});
  for (const auto& c : A.mul.constants()) constants.push_back({nr + c.i, nr + c.j, nr + c.k, c.value});
  FiniteAlgebra out{R.name + "x" + A.name, std::move(basis), Bilinear::from_constants(n, n, n, constants)};
  return out;
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const std::size_t na = a.dim();
  std::vector<std::string> basis;
  for (const auto& l : a.basis) basis.push_back("(" + l + ",0)");
  for (const auto& l : b.basis) basis.push_back("(0," + l + ")");
  std::vector<StructureConstant> constants = a.mul.constants();
  for (const auto& c : b.mul.constants()) constants.push_back({na + c.i, na + c.j, na + c.k, c.value});
  return make_algebra(a.name + "x" + b.name, std::move(basis), constants);
}

Subspace commutator_space(const AlgebraAction& act) {
  std::vector<SparseVector> vectors;
  for (std::size_t i = 0; i < act.acting.dim(); ++i) {
    for (std::size_t k = 0; k < act.acted.dim(); ++k) {
      auto v = axpy(act.left.on_basis(i, k), Rational(-1), act.right.on_basis(k, i));
      if (!v.empty()) vectors.push_back(std::move(v));
    }
  }
  return Subspace::span(act.acted.dim(), vectors);
}

Subspace commutator_space(const FiniteAlgebra& a) { return commutator_space(self_action(a)); }

std::optional<std::string> ideal_violation(const FiniteAlgebra& a, const Subspace& sub) {
  for (std::size_t v = 0; v < sub.dim(); ++v) {
    const SparseVector& x = sub.basis()[v];
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!sub.contains(a.multiply(unit_vector(i), x))) {
        return a.basis[i] + " * (" + vector_label(x, a.basis) + ") is not in the subspace";
      }
      if (!sub.contains(a.multiply(x, unit_vector(i)))) {
        return "(" + vector_label(x, a.basis) + ") * " + a.basis[i] + " is not in the subspace";
      }
    }
  }
  return std::nullopt;
}

QuotientAlgebra quotient_algebra(const FiniteAlgebra& a, const Subspace& ideal) {
  if (auto w = ideal_violation(a, ideal)) throw MathError("not a two-sided ideal: " + *w);
  auto q = quotient_presentation(a.dim(), ideal);
  std::vector<std::string> basis;
  std::vector<SparseVector> reps = q.section.column_vectors();
  for (const auto& r : reps) basis.push_back("[" + a.basis[r.front().index] + "]");
  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < q.dim; ++i) {
    for (std::size_t j = 0; j < q.dim; ++j) {
      for (const auto& t : q.projection.apply(a.multiply(reps[i], reps[j]))) {
        constants.push_back({i, j, t.index, t.value});
      }
    }
  }
  return QuotientAlgebra{make_algebra(a.name + "/I", std::move(basis), constants), std::move(q.projection),
                         std::move(q.section)};
}

SubAlgebra ideal_algebra(const FiniteAlgebra& a, const Subspace& ideal) {
  if (auto w = ideal_violation(a, ideal)) throw MathError("not a two-sided ideal: " + *w);
  SparseMatrix inc = ideal.inclusion();
  LinearSolver solver(inc);
  std::vector<std::string> basis;
  for (const auto& v : ideal.basis()) {
    basis.push_back(v.size() == 1 && v.front().value == 1 ? a.basis[v.front().index] : vector_label(v, a.basis));
  }
  std::vector<StructureConstant> constants;
  const auto& vs = ideal.basis();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      for (const auto& t : solver.solve_or_throw(a.multiply(vs[i], vs[j]))) constants.push_back({i, j, t.index, t.value});
    }
  }
  return SubAlgebra{make_algebra("I", std::move(basis), constants), std::move(inc)};
}

}  // namespace xch
