#include "xch/algebra.hpp"
#include "xch/error.hpp"

namespace xch {

namespace {

std::string pair_witness(const std::string& k1, const std::string& v1, const std::string& k2, const std::string& v2) {
  return "(" + k1 + "=" + v1 + ", " + k2 + "=" + v2 + ")";
}

}  // namespace

ValidationReport validate_crossed_module(const CrossedModule& x) {
  ValidationReport report;
  report.merge(validate_algebra(x.R), "R: ");
  report.merge(validate_algebra(x.A), "A: ");
  if (!report.ok()) return report;
  report.merge(validate_action(x.action()), "action: ");
  if (!report.ok()) return report;
  if (x.rho.rows() != x.A.dim() || x.rho.cols() != x.R.dim()) {
    report.failures.push_back("rho has shape " + std::to_string(x.rho.rows()) + "x" + std::to_string(x.rho.cols()) +
                              ", expected " + std::to_string(x.A.dim()) + "x" + std::to_string(x.R.dim()));
    return report;
  }
  report.merge(validate_homomorphism(x.rho, x.R, x.A), "rho: ");
  const auto& R = x.R;
  const auto& A = x.A;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const auto a = unit_vector(i);
    for (std::size_t k = 0; k < R.dim(); ++k) {
      const auto r = unit_vector(k);
      const auto w = pair_witness("a", A.basis[i], "r", R.basis[k]);
      if (x.rho.apply(x.left.on_basis(i, k)) != A.multiply(a, x.rho.apply(r))) {
        report.failures.push_back("equivariance rho(ar) = a rho(r) fails at " + w);
      }
      if (x.rho.apply(x.right.on_basis(k, i)) != A.multiply(x.rho.apply(r), a)) {
        report.failures.push_back("equivariance rho(ra) = rho(r) a fails at " + w);
      }
    }
  }
  for (std::size_t k = 0; k < R.dim(); ++k) {
    const auto r = unit_vector(k);
    const auto rho_r = x.rho.apply(r);
    for (std::size_t l = 0; l < R.dim(); ++l) {
      const auto r2 = unit_vector(l);
      const auto w = pair_witness("r", R.basis[k], "r'", R.basis[l]);
      const SparseVector& prod = R.mul.on_basis(k, l);
      if (x.left.apply(rho_r, r2) != prod) report.failures.push_back("Peiffer identity rho(r) r' = r r' fails at " + w);
      if (x.right.apply(r, x.rho.apply(r2)) != prod) {
        report.failures.push_back("Peiffer identity r rho(r') = r r' fails at " + w);
      }
    }
  }
  return report;
}

ValidationReport validate_morphism(const XModMorphism& m) {
  ValidationReport report;
  report.merge(validate_homomorphism(m.mu, m.source.R, m.target.R), "mu: ");
  report.merge(validate_homomorphism(m.nu, m.source.A, m.target.A), "nu: ");
  if (!report.ok()) return report;
  if (!(m.target.rho * m.mu == m.nu * m.source.rho)) report.failures.push_back("square rho' mu = nu rho does not commute");
  const auto& S = m.source;
  for (std::size_t i = 0; i < S.A.dim(); ++i) {
    const auto na = m.nu.apply(unit_vector(i));
    for (std::size_t k = 0; k < S.R.dim(); ++k) {
      const auto mr = m.mu.apply(unit_vector(k));
      const auto w = pair_witness("a", S.A.basis[i], "r", S.R.basis[k]);
      if (m.mu.apply(S.left.on_basis(i, k)) != m.target.left.apply(na, mr)) {
        report.failures.push_back("mu(ar) = nu(a) mu(r) fails at " + w);
      }
      if (m.mu.apply(S.right.on_basis(k, i)) != m.target.right.apply(mr, na)) {
        report.failures.push_back("mu(ra) = mu(r) nu(a) fails at " + w);
      }
    }
  }
  return report;
}

ValidationReport validate_extension(const XModExtension& e) {
  ValidationReport report;
  report.merge(validate_morphism(e.incl), "incl: ");
  report.merge(validate_morphism(e.proj), "proj: ");
  if (!report.ok()) return report;
  auto row = [&](const SparseMatrix& in, const SparseMatrix& out, std::size_t left, std::size_t mid, std::size_t right,
                 const std::string& which) {
    if (in.rows() != mid || out.cols() != mid) {
      report.failures.push_back(which + " row: middle terms do not match");
      return;
    }
    if (rank(in) != left) report.failures.push_back(which + " row: first map is not injective");
    if (rank(out) != right) report.failures.push_back(which + " row: second map is not surjective");
    if (!(out * in).is_zero()) report.failures.push_back(which + " row: composite is not zero");
    if (rank(in) + rank(out) != mid) report.failures.push_back(which + " row: not exact in the middle");
  };
  const auto& R = e.incl.source;
  const auto& S = e.incl.target;
  const auto& T = e.proj.target;
  row(e.incl.mu, e.proj.mu, R.R.dim(), S.R.dim(), T.R.dim(), "upper");
  row(e.incl.nu, e.proj.nu, R.A.dim(), S.A.dim(), T.A.dim(), "lower");
  if (!report.ok()) return report;
  if (e.gamma.rows() != S.R.dim() || e.gamma.cols() != T.R.dim() || e.delta.rows() != S.A.dim() ||
      e.delta.cols() != T.A.dim()) {
    report.failures.push_back("splittings have the wrong shape");
    return report;
  }
  if (!(e.proj.mu * e.gamma == SparseMatrix::identity(T.R.dim()))) report.failures.push_back("mu' gamma != 1");
  if (!(e.proj.nu * e.delta == SparseMatrix::identity(T.A.dim()))) report.failures.push_back("nu' delta != 1");
  if (!(S.rho * e.gamma == e.delta * T.rho)) report.failures.push_back("sigma gamma != delta theta");
  return report;
}

CrossedModule make_inclusion_xmod(const FiniteAlgebra& a, const Subspace& ideal, std::string name) {
  SubAlgebra sub = ideal_algebra(a, ideal);
  LinearSolver solver(sub.inclusion);
  const std::size_t nr = sub.algebra.dim();
  Bilinear left(a.dim(), nr, nr);
  Bilinear right(nr, a.dim(), nr);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < nr; ++k) {
      const auto& v = ideal.basis()[k];
      left.set(i, k, solver.solve_or_throw(a.multiply(unit_vector(i), v)));
      right.set(k, i, solver.solve_or_throw(a.multiply(v, unit_vector(i))));
    }
  }
  sub.algebra.name = a.name + "_ideal";
  return CrossedModule{std::move(name), std::move(sub.algebra), a, std::move(sub.inclusion), std::move(left),
                       std::move(right)};
}

CrossedModule make_identity_xmod(const FiniteAlgebra& a, std::string name) {
  return CrossedModule{std::move(name), a, a, SparseMatrix::identity(a.dim()), a.mul, a.mul};
}

CrossedModule make_zero_xmod(const FiniteAlgebra& a, std::string name) {
  return CrossedModule{std::move(name), zero_algebra(), a, SparseMatrix(a.dim(), 0), Bilinear(a.dim(), 0, 0),
                       Bilinear(0, a.dim(), 0)};
}

CrossedModule make_bimodule_xmod(const AlgebraAction& act, std::string name) {
  if (!act.acted.mul.is_zero()) throw MathError("bimodule crossed module needs zero multiplication on the module");
  auto report = validate_action(act);
  if (!report.ok()) throw MathError("invalid action: " + report.failures.front());
  return CrossedModule{std::move(name), act.acted, act.acting, SparseMatrix(act.acting.dim(), act.acted.dim()),
                       act.left, act.right};
}

CrossedModule make_annihilator_xmod(const FiniteAlgebra& r, const FiniteAlgebra& a, const SparseMatrix& rho,
                                    std::string name) {
  if (rho.rows() != a.dim() || rho.cols() != r.dim()) throw MathError("rho has the wrong shape");
  if (rank(rho) != a.dim()) throw MathError("rho is not surjective");
  auto hom = validate_homomorphism(rho, r, a);
  if (!hom.ok()) throw MathError("rho: " + hom.failures.front());
  // Independence of the preimage choice: Ker rho annihilates R on both sides.
  const Subspace null = kernel(rho);
  for (const auto& z : null.basis()) {
    for (std::size_t k = 0; k < r.dim(); ++k) {
      if (!r.multiply(z, unit_vector(k)).empty() || !r.multiply(unit_vector(k), z).empty()) {
        throw MathError("kernel element " + vector_label(z, r.basis) + " does not annihilate " + r.basis[k] +
                        "; the action depends on the preimage");
      }
    }
  }
  LinearSolver solver(rho);
  Bilinear left(a.dim(), r.dim(), r.dim());
  Bilinear right(r.dim(), a.dim(), r.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto pre = solver.solve_or_throw(unit_vector(i));
    for (std::size_t k = 0; k < r.dim(); ++k) {
      left.set(i, k, r.multiply(pre, unit_vector(k)));
      right.set(k, i, r.multiply(unit_vector(k), pre));
    }
  }
  return CrossedModule{std::move(name), r, a, rho, std::move(left), std::move(right)};
}

LinearXMod additive_abelianization(const CrossedModule& x) {
  auto qr = quotient_presentation(x.R.dim(), commutator_space(x.action()));
  auto qa = quotient_presentation(x.A.dim(), commutator_space(x.A));
  return LinearXMod{qr.dim, qa.dim, qa.projection * x.rho * qr.section};
}

}  // namespace xch
