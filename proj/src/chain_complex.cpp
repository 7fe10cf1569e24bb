#include "xch/chain_complex.hpp"

#include "xch/error.hpp"
#include "xch/operators.hpp"
#include "xch/parallel.hpp"

namespace xch {

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::C:
      return "C";
    case Flavor::Cbar:
      return "Cbar";
    case Flavor::CC2:
      return "CC2";
    case Flavor::CC:
      return "CC";
  }
  return "?";
}

std::string ChainComplex::label(std::size_t n, std::size_t i) const {
  if (n >= cells.size() || level_basis.empty()) return "#" + std::to_string(i);
  for (const auto& cell : cells[n]) {
    if (i < cell.offset || i >= cell.offset + cell.size) continue;
    const auto& basis = level_basis[cell.p];
    std::size_t local = i - cell.offset;
    std::vector<std::string> parts(cell.q + 1);
    for (std::size_t k = cell.q + 1; k-- > 0;) {
      parts[k] = basis[local % basis.size()];
      local /= basis.size();
    }
    std::string out = "p=" + std::to_string(cell.p) + " c=" + std::to_string(cell.c) + " ";
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "|" : "") + parts[k];
    return out;
  }
  return "#" + std::to_string(i);
}

ChainComplex zero_complex(std::size_t hi) {
  ChainComplex c;
  c.hi = hi;
  c.dims.assign(hi + 1, 0);
  for (std::size_t n = 0; n <= hi; ++n) c.diffs.emplace_back(0, 0);
  return c;
}

ValidationReport check_complex(const ChainComplex& c) {
  ValidationReport report;
  for (std::size_t n = 0; n <= c.hi; ++n) {
    const std::size_t below = n == 0 ? 0 : c.dims[n - 1];
    if (c.diffs[n].rows() != below || c.diffs[n].cols() != c.dims[n]) {
      report.failures.push_back("differential d_" + std::to_string(n) + " has the wrong shape");
    }
  }
  if (!report.ok()) return report;
  for (std::size_t n = 2; n <= c.hi; ++n) {
    if (!(c.diffs[n - 1] * c.diffs[n]).is_zero()) {
      report.failures.push_back("d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0");
    }
  }
  return report;
}

ValidationReport check_chain_map(const ChainMap& f, const ChainComplex& source, const ChainComplex& target) {
  ValidationReport report;
  const std::size_t hi = std::min(source.hi, target.hi);
  if (f.maps.size() < hi + 1) {
    report.failures.push_back("chain map does not cover the window");
    return report;
  }
  for (std::size_t n = 0; n <= hi; ++n) {
    if (f.maps[n].rows() != target.dims[n] || f.maps[n].cols() != source.dims[n]) {
      report.failures.push_back("chain map component " + std::to_string(n) + " has the wrong shape");
      return report;
    }
  }
  for (std::size_t n = 1; n <= hi; ++n) {
    if (!(target.diffs[n] * f.maps[n] == f.maps[n - 1] * source.diffs[n])) {
      report.failures.push_back("chain map does not commute with d_" + std::to_string(n));
    }
  }
  return report;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap out;
  const std::size_t n = std::min(g.maps.size(), f.maps.size());
  for (std::size_t k = 0; k < n; ++k) out.maps.push_back(g.maps[k] * f.maps[k]);
  return out;
}

ChainMap identity_map(const ChainComplex& c) {
  ChainMap out;
  for (std::size_t n = 0; n <= c.hi; ++n) out.maps.push_back(SparseMatrix::identity(c.dims[n]));
  return out;
}

SubComplex kernel_complex(const ChainMap& f, const ChainComplex& source) {
  SubComplex out;
  ChainComplex& k = out.complex;
  k.hi = source.hi;
  k.dims.resize(source.hi + 1);
  out.inclusion.maps.resize(source.hi + 1);
  parallel_for(source.hi + 1, [&](std::size_t n) {
    out.inclusion.maps[n] = SparseMatrix::from_columns(source.dims[n], kernel_basis(f.maps[n]));
  });
  for (std::size_t n = 0; n <= source.hi; ++n) k.dims[n] = out.inclusion.maps[n].cols();
  k.diffs.resize(source.hi + 1);
  k.diffs[0] = SparseMatrix(0, k.dims[0]);
  parallel_for(source.hi, [&](std::size_t m) {
    const std::size_t n = m + 1;
    LinearSolver solver(out.inclusion.maps[n - 1]);
    const SparseMatrix image = source.diffs[n] * out.inclusion.maps[n];
    std::vector<SparseVector> cols;
    cols.reserve(k.dims[n]);
    for (const auto& v : image.column_vectors()) cols.push_back(solver.solve_or_throw(v));
    k.diffs[n] = SparseMatrix::from_columns(k.dims[n - 1], cols);
  });
  return out;
}

QuotientComplex cokernel_complex(const ChainMap& f, const ChainComplex& target) {
  QuotientComplex out;
  ChainComplex& q = out.complex;
  q.hi = target.hi;
  q.dims.resize(target.hi + 1);
  out.projection.maps.resize(target.hi + 1);
  out.section.maps.resize(target.hi + 1);
  parallel_for(target.hi + 1, [&](std::size_t n) {
    auto pres = quotient_presentation(target.dims[n], image(f.maps[n]));
    q.dims[n] = pres.dim;
    out.projection.maps[n] = std::move(pres.projection);
    out.section.maps[n] = std::move(pres.section);
  });
  q.diffs.resize(target.hi + 1);
  q.diffs[0] = SparseMatrix(0, q.dims[0]);
  for (std::size_t n = 1; n <= target.hi; ++n) {
    q.diffs[n] = out.projection.maps[n - 1] * target.diffs[n] * out.section.maps[n];
  }
  return out;
}

ChainComplex shift_complex(const ChainComplex& c, std::size_t k) {
  ChainComplex out;
  out.hi = c.hi;
  out.level_basis = c.level_basis;
  for (std::size_t n = 0; n <= c.hi; ++n) {
    out.dims.push_back(n >= k ? c.dims[n - k] : 0);
    if (!c.cells.empty()) out.cells.push_back(n >= k ? c.cells[n - k] : std::vector<Cell>{});
  }
  for (std::size_t n = 0; n <= c.hi; ++n) {
    if (n >= k + 1) {
      out.diffs.push_back(c.diffs[n - k]);
    } else {
      out.diffs.emplace_back(n == 0 ? 0 : out.dims[n - 1], out.dims[n]);
    }
  }
  return out;
}

ValidationReport check_ses(const ComplexSES& s) {
  ValidationReport report;
  report.merge(check_chain_map(s.inj, s.left, s.mid), "inj: ");
  report.merge(check_chain_map(s.proj, s.mid, s.right), "proj: ");
  if (!report.ok()) return report;
  const std::size_t hi = std::min({s.left.hi, s.mid.hi, s.right.hi});
  std::vector<ValidationReport> per(hi + 1);
  parallel_for(hi + 1, [&](std::size_t n) {
    const std::string at = " in degree " + std::to_string(n);
    const std::size_t ri = rank(s.inj.maps[n]);
    const std::size_t rp = rank(s.proj.maps[n]);
    if (ri != s.left.dims[n]) per[n].failures.push_back("inj is not injective" + at);
    if (rp != s.right.dims[n]) per[n].failures.push_back("proj is not surjective" + at);
    if (!(s.proj.maps[n] * s.inj.maps[n]).is_zero()) per[n].failures.push_back("proj inj != 0" + at);
    if (ri + rp != s.mid.dims[n]) per[n].failures.push_back("Im inj != Ker proj" + at);
  });
  for (const auto& r : per) report.merge(r);
  return report;
}

}  // namespace xch
