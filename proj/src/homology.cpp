#include "xch/homology.hpp"

#include <optional>

#include "xch/error.hpp"
#include "xch/parallel.hpp"

namespace xch {

Homology::Homology(const ChainComplex& c, std::size_t n) : degree_(n) {
  if (n + 1 > c.hi) {
    throw WindowError("H_" + std::to_string(n) + " needs the complex through degree " + std::to_string(n + 1) +
                      ", window ends at " + std::to_string(c.hi));
  }
  cycles_ = EchelonBasis::from_spanning(c.dims[n], c.diffs[n + 1].column_vectors());
  for (auto& z : kernel_basis(c.diffs[n])) {
    if (cycles_.insert(z, unit_vector(representatives_.size()))) representatives_.push_back(std::move(z));
  }
}

SparseVector Homology::coordinates(const SparseVector& cycle) const {
  auto red = cycles_.reduce(cycle);
  if (!red.remainder.empty()) throw InternalError("vector is not a cycle in degree " + std::to_string(degree_));
  return red.tag;
}

std::vector<Homology> homology_range(const ChainComplex& c, std::size_t lo, std::size_t top) {
  if (top < lo) return {};
  std::vector<std::optional<Homology>> slots(top - lo + 1);
  parallel_for(slots.size(), [&](std::size_t i) { slots[i].emplace(c, lo + i); });
  std::vector<Homology> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<std::size_t> dims_of(const std::vector<Homology>& hs) {
  std::vector<std::size_t> out;
  for (const auto& h : hs) out.push_back(h.dim());
  return out;
}

SparseMatrix induced_on_homology(const ChainMap& f, std::size_t n, const Homology& source, const Homology& target) {
  std::vector<SparseVector> cols;
  cols.reserve(source.dim());
  for (const auto& z : source.representatives()) cols.push_back(target.coordinates(f.maps[n].apply(z)));
  return SparseMatrix::from_columns(target.dim(), cols);
}

SparseMatrix connecting_map(const ComplexSES& s, std::size_t n, const Homology& right_n, const Homology& left_below) {
  if (n == 0) throw WindowError("connecting map needs n >= 1");
  LinearSolver lift(s.proj.maps[n]);
  LinearSolver pull(s.inj.maps[n - 1]);
  std::vector<SparseVector> cols;
  cols.reserve(right_n.dim());
  for (const auto& z : right_n.representatives()) {
    const SparseVector y = lift.solve_or_throw(z);
    const SparseVector x = pull.solve_or_throw(s.mid.diffs[n].apply(y));
    cols.push_back(left_below.coordinates(x));
  }
  return SparseMatrix::from_columns(left_below.dim(), cols);
}

bool ExactnessReport::exact() const {
  for (const auto& p : positions) {
    if (!p.exact) return false;
  }
  return true;
}

ExactnessReport verify_exact(std::string name, std::vector<std::string> labels, std::vector<std::size_t> dims,
                             const std::vector<SparseMatrix>& maps) {
  if (labels.size() != dims.size() || maps.size() + 1 != dims.size()) throw MathError("sequence shape mismatch");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].cols() != dims[i] || maps[i].rows() != dims[i + 1]) {
      throw MathError("map " + std::to_string(i) + " of the sequence has the wrong shape");
    }
  }
  ExactnessReport report{std::move(name), std::move(labels), std::move(dims), {}};
  const std::size_t count = report.dims.size() < 2 ? 0 : report.dims.size() - 2;
  report.positions.resize(count);
  parallel_for(count, [&](std::size_t j) {
    const std::size_t k = j + 1;
    ExactnessPosition p;
    p.label = report.labels[k];
    p.dim = report.dims[k];
    p.composition_zero = (maps[k] * maps[k - 1]).is_zero();
    p.ker_dim = p.dim - rank(maps[k]);
    p.im_dim = rank(maps[k - 1]);
    p.exact = p.composition_zero && p.ker_dim == p.im_dim;
    report.positions[j] = std::move(p);
  });
  return report;
}

LongExactSequence long_exact_sequence(const ComplexSES& s, std::size_t top, const SequenceNames& names) {
  const auto hl = homology_range(s.left, 0, top);
  const auto hm = homology_range(s.mid, 0, top);
  const auto hr = homology_range(s.right, 0, top);
  LongExactSequence les;
  for (std::size_t n = top + 1; n-- > 0;) {
    les.labels.push_back(names.left(n));
    les.labels.push_back(names.mid(n));
    les.labels.push_back(names.right(n));
    les.dims.push_back(hl[n].dim());
    les.dims.push_back(hm[n].dim());
    les.dims.push_back(hr[n].dim());
    les.maps.push_back(induced_on_homology(s.inj, n, hl[n], hm[n]));
    les.maps.push_back(induced_on_homology(s.proj, n, hm[n], hr[n]));
    if (n > 0) les.maps.push_back(connecting_map(s, n, hr[n], hl[n - 1]));
  }
  les.labels.push_back("0");
  les.dims.push_back(0);
  les.maps.push_back(SparseMatrix(0, hr[0].dim()));
  return les;
}

ExactnessReport verify_long_exact(std::string name, const LongExactSequence& les) {
  return verify_exact(std::move(name), les.labels, les.dims, les.maps);
}

}  // namespace xch
