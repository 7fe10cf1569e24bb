#include "xch/theorems.hpp"

#include "xch/error.hpp"

namespace xch {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

Check equal_dims(std::string name, std::size_t got, std::size_t want) {
  return Check{std::move(name), got == want, "got " + std::to_string(got) + ", expected " + std::to_string(want)};
}

Check equal_dims(std::string name, const std::vector<std::size_t>& got, const std::vector<std::size_t>& want) {
  return Check{std::move(name), got == want, "got " + join(got) + ", expected " + join(want)};
}

Check isomorphism(std::string name, const SparseMatrix& m) {
  const std::size_t r = rank(m);
  const bool ok = m.rows() == m.cols() && r == m.rows();
  return Check{std::move(name), ok,
               std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " of rank " + std::to_string(r)};
}

Check validation(std::string name, const ValidationReport& r) {
  return Check{std::move(name), r.ok(), r.ok() ? "ok" : r.failures.front()};
}

std::string indexed(const std::string& base, std::size_t n, const std::string& arg) {
  return base + "_" + std::to_string(n) + "(" + arg + ")";
}

// Offset of the R_1 block of level 1 in degree 1, the cell (p, c, q) = (1, 0, 0).
std::size_t r1_offset(const ChainComplex& c) {
  for (const auto& cell : c.cells[1]) {
    if (cell.p == 1 && cell.c == 0 && cell.q == 0) return cell.offset;
  }
  throw InternalError("complex has no (1,0,0) cell");
}

SparseVector shifted(const SparseVector& v, std::size_t offset) {
  SparseVector out = v;
  for (auto& t : out) t.index += offset;
  return out;
}

// Matrix of R -> H_1(quotient), r -> class of r placed in the (1,0,0) cell.
SparseMatrix r_to_h1(const CrossedModule& x, const ComplexSES& ses, const Homology& h1) {
  const std::size_t off = r1_offset(ses.mid);
  std::vector<SparseVector> cols;
  for (std::size_t k = 0; k < x.R.dim(); ++k) {
    cols.push_back(h1.coordinates(ses.proj.maps[1].apply(unit_vector(off + k))));
  }
  return SparseMatrix::from_columns(h1.dim(), cols);
}

// Checks that [A,R] dies under m and that R/[A,R] -> target is an isomorphism.
void check_factorization(TheoremReport& report, const std::string& name, const SparseMatrix& m,
                         const Subspace& relations, std::size_t ambient) {
  bool kills = true;
  for (const auto& v : relations.basis()) kills = kills && m.apply(v).empty();
  report.checks.push_back(Check{name + " vanishes on the commutator subspace", kills, kills ? "ok" : "nonzero image"});
  const std::size_t quotient = ambient - relations.dim();
  const std::size_t r = rank(m);
  report.checks.push_back(Check{name + " induces an isomorphism", r == quotient && m.rows() == quotient,
                                "quotient dim " + std::to_string(quotient) + ", rank " + std::to_string(r) +
                                    ", target dim " + std::to_string(m.rows())});
}

// Commutators a k - k a for a in A and k in the span of ks, inside R.
Subspace commutators_with(const CrossedModule& x, const std::vector<SparseVector>& ks) {
  std::vector<SparseVector> out;
  for (std::size_t i = 0; i < x.A.dim(); ++i) {
    for (const auto& k : ks) {
      out.push_back(axpy(x.left.apply(unit_vector(i), k), Rational(-1), x.right.apply(k, unit_vector(i))));
    }
  }
  return Subspace::span(x.R.dim(), out);
}

ChainMap lift_into(const ChainMap& f, const SubComplex& k) {
  ChainMap out;
  for (std::size_t n = 0; n < f.maps.size(); ++n) {
    LinearSolver solver(k.inclusion.maps[n]);
    std::vector<SparseVector> cols;
    for (const auto& col : f.maps[n].column_vectors()) cols.push_back(solver.solve_or_throw(col));
    out.maps.push_back(SparseMatrix::from_columns(k.complex.dims[n], cols));
  }
  return out;
}

std::string window(std::size_t n) { return "verified in degrees <= " + std::to_string(n); }

}  // namespace

bool TheoremReport::passed() const {
  for (const auto& s : sequences) {
    if (!s.exact()) return false;
  }
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

std::vector<std::size_t> xmod_homology(const CrossedModule& x, Flavor flavor, std::size_t n_max) {
  return dims_of(homology_range(xmod_complex(x, flavor, n_max + 1), 0, n_max));
}

std::vector<std::size_t> algebra_homology(const FiniteAlgebra& a, Flavor flavor, std::size_t n_max) {
  return dims_of(homology_range(algebra_complex(a, flavor, n_max + 1), 0, n_max));
}

XiHC xi_hc(const CrossedModule& x, std::size_t n_max) {
  ComplexSES ses = base_quotient_ses(x, Flavor::CC, n_max + 2);
  XiHC out{std::move(ses.right), {}};
  out.groups = homology_range(out.gamma, 1, n_max + 1);
  return out;
}

RelativeHC relative_hc(const FiniteAlgebra& a, const Subspace& ideal, std::size_t n_max) {
  if (auto bad = ideal_violation(a, ideal)) throw MathError("not a two-sided ideal: " + *bad);
  const auto q = quotient_algebra(a, ideal);
  const auto cc_a = algebra_complex(a, Flavor::CC, n_max + 1);
  const auto cc_q = algebra_complex(q.algebra, Flavor::CC, n_max + 1);
  const auto f = induced_chain_map({q.projection}, cc_a, cc_q);
  auto k = kernel_complex(f, cc_a);
  RelativeHC out{std::move(k.complex), {}};
  out.groups = homology_range(out.kernel, 0, n_max);
  return out;
}

std::size_t degree_zero_value(const CrossedModule& x) {
  const auto q = quotient_algebra(x.A, image(x.rho));
  return q.algebra.dim() - commutator_space(q.algebra).dim();
}

TheoremReport verify_connes(const CrossedModule& x, std::size_t n_max) {
  TheoremReport report{"connes", {}, {}, {window(n_max)}, {}};
  const auto cc2 = xmod_complex(x, Flavor::CC2, n_max + 1);
  const auto cc = xmod_complex(x, Flavor::CC, n_max + 1);
  const auto ses = connes_ses(cc2, cc);
  report.checks.push_back(validation("0 -> CC2 -> CC -> CC[2] -> 0 is exact", check_ses(ses)));
  SequenceNames names{[](std::size_t n) { return indexed("HH", n, "x"); },
                      [](std::size_t n) { return indexed("HC", n, "x"); },
                      [](std::size_t n) { return n < 2 ? std::string("0") : indexed("HC", n - 2, "x"); }};
  report.sequences.push_back(verify_long_exact("Connes sequence of " + x.name, long_exact_sequence(ses, n_max, names)));
  return report;
}

TheoremReport verify_five_term(const CrossedModule& x) {
  TheoremReport report{"five-term", {}, {}, {}, {}};
  const auto q = quotient_algebra(x.A, image(x.rho));
  const CrossedModule target = make_zero_xmod(q.algebra, "(0,Coker rho,0)");
  const XModMorphism m{"", x, target, SparseMatrix(0, x.R.dim()), q.projection};
  report.checks.push_back(validation("x -> (0,Coker rho,0) is a morphism", validate_morphism(m)));

  const auto ker_rho = kernel(x.rho);
  const Subspace rel = commutators_with(x, ker_rho.basis());
  const std::size_t e_dim = ker_rho.dim() - rel.dim();
  const std::size_t hi = 3;

  for (Flavor flavor : {Flavor::CC2, Flavor::CC}) {
    const std::string h = flavor == Flavor::CC2 ? "HH" : "HC";
    const auto src = xmod_complex(x, flavor, hi);
    const auto tgt = xmod_complex(target, flavor, hi);
    const auto f = induced_chain_map(nerve_morphism(m, hi), src, tgt);
    auto k = kernel_complex(f, src);
    const ComplexSES ses{k.complex, src, tgt, k.inclusion, f};
    report.checks.push_back(validation(h + ": kernel sequence is short exact", check_ses(ses)));

    const auto hs = homology_range(src, 0, 2);
    const auto ht = homology_range(tgt, 0, 2);
    const auto hk = homology_range(k.complex, 0, 2);

    std::vector<std::string> labels{indexed(h, 2, "x"), indexed(h, 2, "Coker rho"), "Ker rho/[A,Ker rho]",
                                    indexed(h, 1, "x"), indexed(h, 1, "Coker rho"), "0"};
    std::vector<std::size_t> dims{hs[2].dim(), ht[2].dim(), hk[1].dim(), hs[1].dim(), ht[1].dim(), 0};
    std::vector<SparseMatrix> maps{induced_on_homology(f, 2, hs[2], ht[2]), connecting_map(ses, 2, ht[2], hk[1]),
                                   induced_on_homology(k.inclusion, 1, hk[1], hs[1]),
                                   induced_on_homology(f, 1, hs[1], ht[1]), SparseMatrix(0, ht[1].dim())};
    report.sequences.push_back(verify_exact(h + " five-term sequence of " + x.name, labels, dims, maps));

    // Ker rho -> H_1(K), k -> class of k in the (1,0,0) cell.
    {
      const std::size_t off = r1_offset(src);
      LinearSolver pull(k.inclusion.maps[1]);
      std::vector<SparseVector> cols;
      for (const auto& v : ker_rho.basis()) {
        cols.push_back(hk[1].coordinates(pull.solve_or_throw(shifted(v, off))));
      }
      const SparseMatrix e_map = SparseMatrix::from_columns(hk[1].dim(), cols);
      // Relations in Ker rho coordinates.
      LinearSolver in_ker(ker_rho.inclusion());
      std::vector<SparseVector> rel_coords;
      for (const auto& r : rel.basis()) rel_coords.push_back(in_ker.solve_or_throw(r));
      check_factorization(report, h + ": Ker rho -> H_1(kernel)", e_map,
                          Subspace::span(ker_rho.dim(), rel_coords), ker_rho.dim());
      report.checks.push_back(equal_dims(h + ": dim Ker rho/[A,Ker rho]", e_dim, hk[1].dim()));
    }

    const auto alg = algebra_complex(q.algebra, flavor, hi);
    const auto ha = homology_range(alg, 0, 2);
    const auto incl = cell_inclusion(alg, tgt);
    for (std::size_t n = 0; n <= 2; ++n) {
      report.checks.push_back(isomorphism(indexed(h, n, "Coker rho") + " of the algebra -> of (0,Coker rho,0)",
                                          induced_on_homology(incl, n, ha[n], ht[n])));
    }
    report.checks.push_back(equal_dims(indexed(h, 0, "x") + " = dim Coker rho/[Coker rho,Coker rho]",
                                       hs[0].dim(), degree_zero_value(x)));
  }
  return report;
}

TheoremReport verify_collapse(const CrossedModule& x, std::size_t n_max) {
  TheoremReport report{"collapse", {}, {}, {window(n_max)}, {}};
  const bool injective = rank(x.rho) == x.R.dim();
  report.checks.push_back(Check{"rho is injective", injective, injective ? "ok" : "rho has a kernel"});
  if (!injective) return report;

  const auto aug = augmented_nerve(x, n_max + 1);
  for (int n = -1; n <= 1; ++n) {
    report.checks.push_back(equal_dims("pi_" + std::to_string(n) + " of the augmented nerve",
                                       homotopy_group(aug, n).dim, 0));
  }
  const auto mc = moore(aug.base, n_max);
  for (std::size_t n = 2; n <= n_max; ++n) {
    report.checks.push_back(equal_dims("Moore complex in degree " + std::to_string(n), mc.dim(n), 0));
  }

  const auto q = quotient_algebra(x.A, image(x.rho));
  for (Flavor flavor : {Flavor::C, Flavor::Cbar, Flavor::CC2, Flavor::CC}) {
    const std::string f = flavor_name(flavor);
    const auto got = xmod_homology(x, flavor, n_max);
    const auto want = algebra_homology(q.algebra, flavor, n_max);
    report.tables.push_back(Table{f + "(x)", 0, got});
    report.tables.push_back(Table{f + "(A/I)", 0, want});
    report.checks.push_back(equal_dims(f + "(x) against " + f + "(A/I)", got, want));
  }
  return report;
}

TheoremReport verify_beta_gamma(const CrossedModule& x) {
  TheoremReport report{"beta-gamma", {}, {}, {}, {}};
  const auto bg = beta_gamma(x, 2);
  report.checks.push_back(validation("beta sequence is short exact", check_ses(bg.beta_ses)));
  report.checks.push_back(validation("gamma sequence is short exact", check_ses(bg.gamma_ses)));
  const Subspace rel = commutator_space(x.action());
  for (const auto* ses : {&bg.beta_ses, &bg.gamma_ses}) {
    const std::string which = ses == &bg.beta_ses ? "beta" : "gamma";
    const Homology h0(ses->right, 0);
    const Homology h1(ses->right, 1);
    report.checks.push_back(equal_dims("H_0(" + which + ")", h0.dim(), 0));
    check_factorization(report, "R -> H_1(" + which + ")", r_to_h1(x, *ses, h1), rel, x.R.dim());
  }
  return report;
}

TheoremReport verify_relat(const FiniteAlgebra& a, const Subspace& ideal, std::size_t n_max) {
  TheoremReport report{"relat", {}, {}, {window(n_max)}, {}};
  const auto x = make_inclusion_xmod(a, ideal, "inclusion");
  const auto xi = xi_hc(x, n_max);
  const auto rel = relative_hc(a, ideal, n_max);
  report.tables.push_back(Table{"xiHC(I -> A)", 0, dims_of(xi.groups)});
  report.tables.push_back(Table{"HC(A, I)", 0, dims_of(rel.groups)});
  report.checks.push_back(equal_dims("xiHC(I -> A) against HC(A, I)", dims_of(xi.groups), dims_of(rel.groups)));
  const std::size_t i_mod = x.R.dim() - commutator_space(x.action()).dim();
  report.checks.push_back(equal_dims("xiHC_0 = I/[A,I]", xi.groups[0].dim(), i_mod));
  return report;
}

TheoremReport verify_connection(const CrossedModule& x, std::size_t n_max) {
  TheoremReport report{"connection", {}, {}, {window(n_max + 1)}, {}};
  const std::size_t hi = n_max + 2;
  const std::size_t top = n_max + 1;
  const auto bg = beta_gamma(x, hi);
  report.checks.push_back(validation("gamma sequence is short exact", check_ses(bg.gamma_ses)));
  report.checks.push_back(validation("beta -> gamma -> gamma[2] is short exact", check_ses(bg.shift_ses)));

  auto xi_name = [](std::size_t n) { return n == 0 ? std::string("H_0(gamma)") : indexed("xiHC", n - 1, "x"); };
  SequenceNames first{[](std::size_t n) { return indexed("HC", n, "A"); },
                      [](std::size_t n) { return indexed("HC", n, "x"); }, xi_name};
  report.sequences.push_back(
      verify_long_exact("HC(A) -> HC(x) -> xiHC(x) for " + x.name, long_exact_sequence(bg.gamma_ses, top, first)));

  SequenceNames second{[](std::size_t n) { return indexed("H", n, "beta"); }, xi_name, [xi_name](std::size_t n) {
                         return n < 2 ? std::string("0") : xi_name(n - 2);
                       }};
  report.sequences.push_back(
      verify_long_exact("beta -> xiHC -> xiHC[-2] for " + x.name, long_exact_sequence(bg.shift_ses, top, second)));

  // Identification of the terms.
  const auto ha = algebra_homology(x.A, Flavor::CC, top);
  const auto hl = dims_of(homology_range(bg.gamma_ses.left, 0, top));
  report.checks.push_back(equal_dims("H(CC(0,A,0)) against HC(A)", hl, ha));
  const Subspace rel = commutator_space(x.action());
  const Homology g0(bg.gamma_ses.right, 0);
  const Homology g1(bg.gamma_ses.right, 1);
  report.checks.push_back(equal_dims("H_0(gamma)", g0.dim(), 0));
  check_factorization(report, "R -> xiHC_0(x)", r_to_h1(x, bg.gamma_ses, g1), rel, x.R.dim());
  const Homology b1(bg.beta_ses.right, 1);
  report.checks.push_back(
      isomorphism("H_1(beta) -> xiHC_0(x)", induced_on_homology(bg.shift_ses.inj, 1, b1, g1)));
  const Homology m0(bg.gamma_ses.mid, 0);
  report.checks.push_back(equal_dims("HC_0(x) = A/(Im rho + [A,A])", m0.dim(), degree_zero_value(x)));
  return report;
}

TheoremReport verify_excision(const XModExtension& e, std::size_t n_max) {
  TheoremReport report{"excision", {}, {}, {window(n_max)}, {}};
  report.checks.push_back(validation("extension", validate_extension(e)));
  if (!report.checks.back().ok) return report;
  const CrossedModule& xr = e.incl.source;
  const CrossedModule& xs = e.incl.target;
  const CrossedModule& xt = e.proj.target;
  const bool injective = rank(xr.rho) == xr.R.dim();
  report.checks.push_back(Check{"kernel is an inclusion crossed module", injective, injective ? "ok" : "rho has a kernel"});
  if (!injective) return report;

  const auto bar = xmod_homology(xr, Flavor::Cbar, n_max + 1);
  report.checks.push_back(
      equal_dims("bar homology of the kernel vanishes", bar, std::vector<std::size_t>(bar.size(), 0)));
  report.qualifiers.push_back("bar acyclicity of the kernel " + window(n_max + 1));

  const std::size_t hi = n_max + 1;
  const auto cr = xmod_complex(xr, Flavor::CC2, hi);
  const auto cs = xmod_complex(xs, Flavor::CC2, hi);
  const auto ct = xmod_complex(xt, Flavor::CC2, hi);
  const auto g = induced_chain_map(nerve_morphism(e.incl, hi), cr, cs);
  const auto f = induced_chain_map(nerve_morphism(e.proj, hi), cs, ct);
  auto k = kernel_complex(f, cs);
  const ComplexSES ses{k.complex, cs, ct, k.inclusion, f};
  report.checks.push_back(validation("kernel sequence is short exact", check_ses(ses)));

  const ChainMap comparison = lift_into(g, k);
  report.checks.push_back(validation("comparison is a chain map", check_chain_map(comparison, cr, k.complex)));
  const auto hr = homology_range(cr, 0, n_max);
  const auto hk = homology_range(k.complex, 0, n_max);
  const auto hs = homology_range(cs, 0, n_max);
  const auto ht = homology_range(ct, 0, n_max);
  std::vector<SparseMatrix> comp_inv;
  bool quasi = true;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto m = induced_on_homology(comparison, n, hr[n], hk[n]);
    report.checks.push_back(isomorphism(indexed("HH", n, "kernel") + " -> H_" + std::to_string(n) + " of Ker", m));
    quasi = quasi && report.checks.back().ok;
    if (quasi) comp_inv.push_back(inverse(m));
  }
  if (!quasi) return report;

  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> maps;
  for (std::size_t n = n_max + 1; n-- > 0;) {
    labels.push_back(indexed("HH", n, xr.name));
    labels.push_back(indexed("HH", n, xs.name));
    labels.push_back(indexed("HH", n, xt.name));
    dims.push_back(hr[n].dim());
    dims.push_back(hs[n].dim());
    dims.push_back(ht[n].dim());
    maps.push_back(induced_on_homology(g, n, hr[n], hs[n]));
    maps.push_back(induced_on_homology(f, n, hs[n], ht[n]));
    if (n > 0) maps.push_back(comp_inv[n - 1] * connecting_map(ses, n, ht[n], hk[n - 1]));
  }
  labels.push_back("0");
  dims.push_back(0);
  maps.push_back(SparseMatrix(0, ht[0].dim()));
  report.sequences.push_back(verify_exact("excision sequence of " + e.name, labels, dims, maps));
  return report;
}

TheoremReport verify_tensor_homotopy(const CrossedModule& x, std::size_t max_p, std::size_t max_q) {
  TheoremReport report{"tensor-homotopy", {}, {}, {}, {}};
  const std::size_t hi = max_q + 1;
  const auto s = nerve(x, hi);
  const std::size_t pi0 = homotopy_group(s, 0).dim;
  const std::size_t pi1 = homotopy_group(s, 1).dim;
  report.checks.push_back(equal_dims("pi_0 = Coker rho", pi0, x.A.dim() - rank(x.rho)));
  report.checks.push_back(equal_dims("pi_1 = Ker rho", pi1, x.R.dim() - rank(x.rho)));

  for (std::size_t p = 0; p <= max_p; ++p) {
    ChainComplex c;
    c.hi = hi;
    for (std::size_t k = 0; k <= hi; ++k) {
      const std::size_t level = s.levels[k].dim();
      std::size_t d = 1;
      for (std::size_t j = 0; j <= p; ++j) d *= level;
      c.dims.push_back(d);
      if (k == 0) {
        c.diffs.push_back(SparseMatrix(0, d));
        continue;
      }
      SparseMatrix diff(c.dims[k - 1], d);
      for (std::size_t i = 0; i <= k; ++i) {
        const SparseMatrix term = kron_power(s.faces[k][i], p + 1);
        diff = i % 2 == 0 ? diff + term : diff - term;
      }
      c.diffs.push_back(std::move(diff));
    }
    const auto got = dims_of(homology_range(c, 0, max_q));
    std::vector<std::size_t> want(max_q + 1, 0);
    // Sum over (i_0..i_p) in {0,1}^{p+1}; other homotopy groups vanish.
    for (std::size_t mask = 0; mask < (std::size_t{1} << (p + 1)); ++mask) {
      const auto q = static_cast<std::size_t>(__builtin_popcountll(mask));
      if (q > max_q) continue;
      std::size_t prod = 1;
      for (std::size_t j = 0; j <= p; ++j) prod *= (mask >> j) & 1 ? pi1 : pi0;
      want[q] += prod;
    }
    report.checks.push_back(equal_dims("H of the " + std::to_string(p + 1) + "-fold tensor power", got, want));
  }
  return report;
}

}  // namespace xch
