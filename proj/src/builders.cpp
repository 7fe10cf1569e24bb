#include <map>
#include <tuple>

#include "xch/chain_complex.hpp"
#include "xch/error.hpp"
#include "xch/operators.hpp"
#include "xch/parallel.hpp"

namespace xch {

namespace {

std::size_t max_column(Flavor flavor, std::size_t n) {
  switch (flavor) {
    case Flavor::C:
    case Flavor::Cbar:
      return 0;
    case Flavor::CC2:
      return std::min<std::size_t>(1, n);
    case Flavor::CC:
      return n;
  }
  return 0;
}

std::vector<Cell> degree_cells(const std::vector<std::size_t>& level_dims, Flavor flavor, std::size_t n,
                               std::size_t max_p) {
  std::vector<Cell> cells;
  std::size_t offset = 0;
  for (std::size_t p = 0; p <= std::min(n, max_p); ++p) {
    for (std::size_t c = 0; c <= max_column(flavor, n - p); ++c) {
      const std::size_t q = n - p - c;
      const std::size_t size = tensor_dim(level_dims[p], q + 1);
      cells.push_back(Cell{p, c, q, offset, size});
      offset += size;
    }
  }
  return cells;
}

const Cell* find_cell(const std::vector<Cell>& cells, std::size_t p, std::size_t c, std::size_t q) {
  for (const auto& cell : cells) {
    if (cell.p == p && cell.c == c && cell.q == q) return &cell;
  }
  return nullptr;
}

void add_block(std::vector<Triplet>& entries, const SparseMatrix& block, std::size_t row_offset,
               std::size_t col_offset, const Rational& factor = 1) {
  for (const auto& t : block.triplets()) {
    entries.push_back(Triplet{t.row + row_offset, t.col + col_offset, factor * t.value});
  }
}

struct Levels {
  std::vector<const FiniteAlgebra*> algebras;
  const std::vector<std::vector<SparseMatrix>>* faces = nullptr;
};

ChainComplex build(const Levels& levels, Flavor flavor, std::size_t hi, std::size_t max_p) {
  ChainComplex out;
  out.hi = hi;
  std::vector<std::size_t> level_dims;
  for (const auto* a : levels.algebras) {
    level_dims.push_back(a->dim());
    out.level_basis.push_back(a->basis);
  }
  for (std::size_t n = 0; n <= hi; ++n) {
    out.cells.push_back(degree_cells(level_dims, flavor, n, max_p));
    std::size_t total = 0;
    for (const auto& cell : out.cells[n]) total += cell.size;
    out.dims.push_back(total);
  }
  out.diffs.resize(hi + 1);
  out.diffs[0] = SparseMatrix(0, out.dims[0]);
  parallel_for(hi, [&](std::size_t m) {
    const std::size_t n = m + 1;
    // Operators on a given level and tensor length are shared by several cells.
    std::map<std::tuple<int, std::size_t, std::size_t>, SparseMatrix> cache;
    auto op = [&](int kind, std::size_t p, std::size_t q) -> const SparseMatrix& {
      auto key = std::make_tuple(kind, p, q);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
      const FiniteAlgebra& a = *levels.algebras[p];
      SparseMatrix value;
      switch (kind) {
        case 0:
          value = hochschild_boundary(a.mul, q);
          break;
        case 1:
          value = bar_boundary(a.mul, q);
          break;
        case 2:
          value = SparseMatrix::identity(tensor_dim(a.dim(), q + 1)) - cyclic_operator(a.dim(), q);
          break;
        case 3:
          value = norm_operator(a.dim(), q);
          break;
        default: {
          const auto& faces = (*levels.faces)[p];
          std::vector<Triplet> entries;
          for (std::size_t i = 0; i < faces.size(); ++i) {
            add_block(entries, kron_power(faces[i], q + 1), 0, 0, i % 2 == 0 ? 1 : -1);
          }
          value = SparseMatrix::from_triplets(tensor_dim(level_dims[p - 1], q + 1), tensor_dim(level_dims[p], q + 1),
                                              std::move(entries));
        }
      }
      return cache.emplace(key, std::move(value)).first->second;
    };
    std::vector<Triplet> entries;
    const auto& below = out.cells[n - 1];
    for (const auto& cell : out.cells[n]) {
      const auto [p, c, q, offset, size] = cell;
      (void)size;
      if (q >= 1) {
        const Cell* t = find_cell(below, p, c, q - 1);
        const bool use_b = flavor == Flavor::C || (flavor != Flavor::Cbar && c % 2 == 0);
        const Rational sign = (flavor == Flavor::CC2 || flavor == Flavor::CC) && c % 2 == 1 ? -1 : 1;
        add_block(entries, op(use_b ? 0 : 1, p, q), t->offset, offset, sign);
      }
      if (c >= 1) {
        const Cell* t = find_cell(below, p, c - 1, q);
        add_block(entries, op(c % 2 == 1 ? 2 : 3, p, q), t->offset, offset);
      }
      if (p >= 1) {
        const Cell* t = find_cell(below, p - 1, c, q);
        add_block(entries, op(4, p, q), t->offset, offset, (c + q) % 2 == 0 ? 1 : -1);
      }
    }
    out.diffs[n] = SparseMatrix::from_triplets(out.dims[n - 1], out.dims[n], std::move(entries));
  });
  return out;
}

}  // namespace

ChainComplex simplicial_complex(const SimplicialAlgebra& s, Flavor flavor, std::size_t hi) {
  if (s.max_level() < hi) {
    throw WindowError("complex through degree " + std::to_string(hi) + " needs nerve level " + std::to_string(hi));
  }
  Levels levels;
  for (const auto& a : s.levels) levels.algebras.push_back(&a);
  levels.faces = &s.faces;
  return build(levels, flavor, hi, hi);
}

ChainComplex algebra_complex(const FiniteAlgebra& a, Flavor flavor, std::size_t hi) {
  Levels levels;
  levels.algebras.push_back(&a);
  return build(levels, flavor, hi, 0);
}

ChainComplex xmod_complex(const CrossedModule& x, Flavor flavor, std::size_t hi) {
  return simplicial_complex(nerve(x, hi), flavor, hi);
}

std::size_t estimate_dimension(const CrossedModule& x, Flavor flavor, std::size_t hi) {
  std::vector<std::size_t> level_dims;
  for (std::size_t p = 0; p <= hi; ++p) level_dims.push_back(p * x.R.dim() + x.A.dim());
  std::size_t worst = 0;
  for (std::size_t n = 0; n <= hi; ++n) {
    std::size_t total = 0;
    for (const auto& cell : degree_cells(level_dims, flavor, n, hi)) total += cell.size;
    worst = std::max(worst, total);
  }
  return worst;
}

std::vector<SparseMatrix> nerve_morphism(const XModMorphism& m, std::size_t max_level) {
  std::vector<SparseMatrix> out;
  const std::size_t sr = m.source.R.dim(), sa = m.source.A.dim();
  const std::size_t tr = m.target.R.dim(), ta = m.target.A.dim();
  for (std::size_t p = 0; p <= max_level; ++p) {
    std::vector<Triplet> entries;
    for (std::size_t k = 0; k < p; ++k) add_block(entries, m.mu, k * tr, k * sr);
    add_block(entries, m.nu, p * tr, p * sr);
    out.push_back(SparseMatrix::from_triplets(p * tr + ta, p * sr + sa, std::move(entries)));
  }
  return out;
}

ChainMap induced_chain_map(const std::vector<SparseMatrix>& level_maps, const ChainComplex& source,
                           const ChainComplex& target) {
  const std::size_t hi = std::min(source.hi, target.hi);
  ChainMap f;
  f.maps.resize(hi + 1);
  parallel_for(hi + 1, [&](std::size_t n) {
    std::vector<Triplet> entries;
    for (const auto& cell : source.cells[n]) {
      const Cell* t = find_cell(target.cells[n], cell.p, cell.c, cell.q);
      if (!t) throw InternalError("induced map: target complex lacks a source cell");
      add_block(entries, kron_power(level_maps.at(cell.p), cell.q + 1), t->offset, cell.offset);
    }
    f.maps[n] = SparseMatrix::from_triplets(target.dims[n], source.dims[n], std::move(entries));
  });
  return f;
}

ChainMap cell_inclusion(const ChainComplex& sub, const ChainComplex& target) {
  std::vector<SparseMatrix> ids;
  for (const auto& basis : sub.level_basis) ids.push_back(SparseMatrix::identity(basis.size()));
  return induced_chain_map(ids, sub, target);
}

ComplexSES connes_ses(const ChainComplex& cc2, const ChainComplex& cc) {
  ComplexSES s;
  s.left = cc2;
  s.mid = cc;
  s.right = shift_complex(cc, 2);
  s.inj = cell_inclusion(cc2, cc);
  s.proj.maps.resize(cc.hi + 1);
  for (std::size_t n = 0; n <= cc.hi; ++n) {
    std::vector<Triplet> entries;
    for (const auto& cell : cc.cells[n]) {
      if (cell.c < 2) continue;
      const Cell* t = find_cell(s.right.cells[n], cell.p, cell.c - 2, cell.q);
      if (!t) throw InternalError("Connes projection: missing shifted cell");
      for (std::size_t i = 0; i < cell.size; ++i) entries.push_back(Triplet{t->offset + i, cell.offset + i, Rational(1)});
    }
    s.proj.maps[n] = SparseMatrix::from_triplets(s.right.dims[n], cc.dims[n], std::move(entries));
  }
  return s;
}

ComplexSES base_quotient_ses(const CrossedModule& x, Flavor flavor, std::size_t hi, ChainMap* section) {
  const CrossedModule zero = make_zero_xmod(x.A);
  const XModMorphism incl{"", zero, x, SparseMatrix(x.R.dim(), 0), SparseMatrix::identity(x.A.dim())};
  ComplexSES ses;
  ses.left = xmod_complex(zero, flavor, hi);
  ses.mid = xmod_complex(x, flavor, hi);
  ses.inj = induced_chain_map(nerve_morphism(incl, hi), ses.left, ses.mid);
  for (std::size_t n = 0; n <= hi; ++n) {
    if (rank(ses.inj.maps[n]) != ses.left.dims[n]) {
      throw InternalError("inclusion of the (0,A,0) complex is not injective in degree " + std::to_string(n));
    }
  }
  auto q = cokernel_complex(ses.inj, ses.mid);
  ses.right = std::move(q.complex);
  ses.proj = std::move(q.projection);
  if (section) *section = std::move(q.section);
  return ses;
}

BetaGamma beta_gamma(const CrossedModule& x, std::size_t hi) {
  BetaGamma out;
  ChainMap beta_section;
  ChainMap gamma_section;
  out.beta_ses = base_quotient_ses(x, Flavor::CC2, hi, &beta_section);
  out.gamma_ses = base_quotient_ses(x, Flavor::CC, hi, &gamma_section);

  ComplexSES& s = out.shift_ses;
  s.left = out.beta_ses.right;
  s.mid = out.gamma_ses.right;
  s.right = shift_complex(s.mid, 2);
  const ChainMap cc_incl = cell_inclusion(out.beta_ses.mid, out.gamma_ses.mid);
  const ComplexSES connes = connes_ses(out.beta_ses.mid, out.gamma_ses.mid);
  s.inj = compose(out.gamma_ses.proj, compose(cc_incl, beta_section));
  s.proj.maps.resize(hi + 1);
  for (std::size_t n = 0; n <= hi; ++n) {
    if (n < 2) {
      s.proj.maps[n] = SparseMatrix(0, s.mid.dims[n]);
    } else {
      s.proj.maps[n] = out.gamma_ses.proj.maps[n - 2] * connes.proj.maps[n] * gamma_section.maps[n];
    }
  }
  return out;
}

}  // namespace xch
