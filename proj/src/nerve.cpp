#include "xch/nerve.hpp"

#include "xch/error.hpp"

namespace xch {

namespace {

constexpr int kDrop = 0;
constexpr int kToBase = -1;

// Linear map level n -> level m sending R block k (1-based) to R block
// dest[k-1], to A through rho (kToBase), or to zero (kDrop). A goes to A.
SparseMatrix block_map(const CrossedModule& x, std::size_t n, std::size_t m, const std::vector<int>& dest) {
  const std::size_t nr = x.R.dim();
  const std::size_t na = x.A.dim();
  std::vector<Triplet> entries;
  for (std::size_t k = 1; k <= n; ++k) {
    const int d = dest[k - 1];
    for (std::size_t i = 0; i < nr; ++i) {
      const std::size_t col = (k - 1) * nr + i;
      if (d > 0) {
        entries.push_back(Triplet{(static_cast<std::size_t>(d) - 1) * nr + i, col, Rational(1)});
      } else if (d == kToBase) {
        for (const auto& t : x.rho.column(i)) entries.push_back(Triplet{m * nr + t.index, col, t.value});
      }
    }
  }
  for (std::size_t a = 0; a < na; ++a) entries.push_back(Triplet{m * nr + a, n * nr + a, Rational(1)});
  return SparseMatrix::from_triplets(m * nr + na, n * nr + na, std::move(entries));
}

FiniteAlgebra nerve_level(const CrossedModule& x, std::size_t n) {
  const std::size_t nr = x.R.dim();
  const std::size_t base = n * nr;
  std::vector<std::string> basis;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& l : x.R.basis) basis.push_back(l + "_" + std::to_string(k));
  }
  for (const auto& l : x.A.basis) basis.push_back(l);
  std::vector<StructureConstant> constants;
  for (const auto& c : x.R.mul.constants()) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t out = std::min(j, k);
        constants.push_back({(j - 1) * nr + c.i, (k - 1) * nr + c.j, (out - 1) * nr + c.k, c.value});
      }
    }
  }
  for (const auto& c : x.left.constants()) {
    for (std::size_t k = 1; k <= n; ++k) constants.push_back({base + c.i, (k - 1) * nr + c.j, (k - 1) * nr + c.k, c.value});
  }
  for (const auto& c : x.right.constants()) {
    for (std::size_t k = 1; k <= n; ++k) constants.push_back({(k - 1) * nr + c.i, base + c.j, (k - 1) * nr + c.k, c.value});
  }
  for (const auto& c : x.A.mul.constants()) constants.push_back({base + c.i, base + c.j, base + c.k, c.value});
  return make_algebra(x.A.name + "_N" + std::to_string(n), std::move(basis), constants);
}

}  // namespace

SimplicialAlgebra nerve(const CrossedModule& x, std::size_t max_level) {
  SimplicialAlgebra s;
  for (std::size_t n = 0; n <= max_level; ++n) s.levels.push_back(nerve_level(x, n));
  s.faces.resize(max_level + 1);
  s.degeneracies.resize(max_level + 1);
  for (std::size_t n = 1; n <= max_level; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<int> dest(n);
      for (std::size_t k = 1; k <= n; ++k) {
        int d;
        if (i == 0) {
          d = k == 1 ? kDrop : static_cast<int>(k - 1);
        } else if (i == n) {
          d = k == n ? kToBase : static_cast<int>(k);
        } else {
          d = k <= i ? static_cast<int>(k) : static_cast<int>(k - 1);
        }
        dest[k - 1] = d;
      }
      s.faces[n].push_back(block_map(x, n, n - 1, dest));
    }
  }
  for (std::size_t n = 0; n < max_level; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<int> dest(n);
      for (std::size_t k = 1; k <= n; ++k) dest[k - 1] = static_cast<int>(k <= i ? k : k + 1);
      s.degeneracies[n].push_back(block_map(x, n, n + 1, dest));
    }
  }
  return s;
}

SimplicialAlgebra constant_simplicial(const FiniteAlgebra& a, std::size_t max_level) {
  SimplicialAlgebra s;
  const auto id = SparseMatrix::identity(a.dim());
  s.levels.assign(max_level + 1, a);
  s.faces.resize(max_level + 1);
  s.degeneracies.resize(max_level + 1);
  for (std::size_t n = 1; n <= max_level; ++n) s.faces[n].assign(n + 1, id);
  for (std::size_t n = 0; n < max_level; ++n) s.degeneracies[n].assign(n + 1, id);
  return s;
}

AugmentedSimplicialAlgebra augmented_nerve(const CrossedModule& x, std::size_t max_level) {
  auto q = quotient_algebra(x.A, image(x.rho));
  return AugmentedSimplicialAlgebra{nerve(x, max_level), std::move(q.algebra), std::move(q.projection)};
}

ValidationReport validate_simplicial(const SimplicialAlgebra& s) {
  ValidationReport report;
  const std::size_t top = s.max_level();
  auto tag = [](const char* what, std::size_t n, std::size_t i) {
    return std::string(what) + "^" + std::to_string(n) + "_" + std::to_string(i) + ": ";
  };
  for (std::size_t n = 1; n <= top; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      report.merge(validate_homomorphism(s.faces[n][i], s.levels[n], s.levels[n - 1]), tag("d", n, i));
    }
  }
  for (std::size_t n = 0; n < top; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      report.merge(validate_homomorphism(s.degeneracies[n][i], s.levels[n], s.levels[n + 1]), tag("s", n, i));
    }
  }
  auto fail = [&](const std::string& what) { report.failures.push_back(what); };
  const auto& d = s.faces;
  const auto& sg = s.degeneracies;
  // d_i d_j = d_{j-1} d_i for i < j, on level n.
  for (std::size_t n = 2; n <= top; ++n) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (!(d[n - 1][i] * d[n][j] == d[n - 1][j - 1] * d[n][i])) {
          fail("d_i d_j = d_{j-1} d_i fails at (n=" + std::to_string(n) + ", i=" + std::to_string(i) +
               ", j=" + std::to_string(j) + ")");
        }
      }
    }
  }
  // Face-degeneracy relations on level n (s_j : n -> n+1, d_i : n+1 -> n).
  for (std::size_t n = 0; n < top; ++n) {
    const auto id = SparseMatrix::identity(s.levels[n].dim());
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i <= n + 1; ++i) {
        const SparseMatrix lhs = d[n + 1][i] * sg[n][j];
        SparseMatrix rhs;
        if (i < j) {
          rhs = sg[n - 1][j - 1] * d[n][i];
        } else if (i == j || i == j + 1) {
          rhs = id;
        } else {
          rhs = sg[n - 1][j] * d[n][i - 1];
        }
        if (!(lhs == rhs)) {
          fail("d_i s_j relation fails at (n=" + std::to_string(n) + ", i=" + std::to_string(i) +
               ", j=" + std::to_string(j) + ")");
        }
      }
    }
  }
  // s_i s_j = s_{j+1} s_i for i <= j, on level n.
  for (std::size_t n = 0; n + 1 < top; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        if (!(sg[n + 1][i] * sg[n][j] == sg[n + 1][j + 1] * sg[n][i])) {
          fail("s_i s_j = s_{j+1} s_i fails at (n=" + std::to_string(n) + ", i=" + std::to_string(i) +
               ", j=" + std::to_string(j) + ")");
        }
      }
    }
  }
  return report;
}

ValidationReport validate_augmentation(const AugmentedSimplicialAlgebra& s) {
  ValidationReport report;
  report.merge(validate_homomorphism(s.aug, s.base.levels[0], s.target), "augmentation: ");
  if (s.base.max_level() >= 1 && !(s.aug * s.base.faces[1][0] == s.aug * s.base.faces[1][1])) {
    report.failures.push_back("augmentation does not equalize d_0 and d_1");
  }
  return report;
}

MooreComplex moore(const SimplicialAlgebra& s, std::size_t top) {
  if (top > s.max_level()) {
    throw WindowError("Moore complex through degree " + std::to_string(top) + " needs nerve level " +
                      std::to_string(top) + ", built " + std::to_string(s.max_level()));
  }
  MooreComplex m;
  for (std::size_t n = 0; n <= top; ++n) {
    if (n == 0) {
      m.bases.push_back(SparseMatrix::identity(s.levels[0].dim()));
      m.boundaries.emplace_back();
      continue;
    }
    SparseMatrix stacked(0, s.levels[n].dim());
    for (std::size_t i = 0; i < n; ++i) stacked = vstack(stacked, s.faces[n][i]);
    m.bases.push_back(kernel(stacked).inclusion());
    LinearSolver solver(m.bases[n - 1]);
    std::vector<SparseVector> cols;
    for (const auto& v : m.bases[n].column_vectors()) cols.push_back(solver.solve_or_throw(s.faces[n][n].apply(v)));
    m.boundaries.push_back(SparseMatrix::from_columns(m.bases[n - 1].cols(), cols));
  }
  return m;
}

Subquotient homotopy_group(const SimplicialAlgebra& s, std::size_t n) {
  if (n + 1 > s.max_level()) throw WindowError("pi_" + std::to_string(n) + " needs nerve level " + std::to_string(n + 1));
  const MooreComplex m = moore(s, n + 1);
  const std::size_t dim = m.dim(n);
  std::vector<SparseVector> cycles =
      n == 0 ? SparseMatrix::identity(dim).column_vectors() : kernel_basis(m.boundaries[n]);
  Subquotient q = subquotient(dim, cycles, m.boundaries[n + 1].column_vectors());
  for (auto& r : q.representatives) r = m.bases[n].apply(r);
  return q;
}

Subquotient homotopy_group(const AugmentedSimplicialAlgebra& s, int n) {
  if (n == -1) {
    return subquotient(s.target.dim(), SparseMatrix::identity(s.target.dim()).column_vectors(),
                       s.aug.column_vectors());
  }
  if (n > 0) return homotopy_group(s.base, static_cast<std::size_t>(n));
  if (s.base.max_level() < 1) throw WindowError("pi_0 needs nerve level 1");
  const MooreComplex m = moore(s.base, 1);
  return subquotient(s.base.levels[0].dim(), kernel_basis(s.aug), m.boundaries[1].column_vectors());
}

}  // namespace xch
