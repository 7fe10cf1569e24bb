#include "xch/linalg.hpp"

#include <gmp.h>

#include <algorithm>
#include <map>
#include <queue>

#include "xch/detail/elimination.hpp"
#include "xch/error.hpp"
#include "xch/field.hpp"

namespace xch {

using detail::FieldRow;

PrimeField::Element PrimeField::from_rational(const Rational& q) const {
  mpz_class pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_class num = q.get_num() % pp;
  mpz_class den = q.get_den() % pp;
  if (num < 0) num += pp;
  if (den == 0) throw FieldError("prime divides a denominator");
  auto to_u64 = [](const mpz_class& z) {
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, z.get_mpz_t());
    return out;
  };
  return mul(to_u64(num), inv(to_u64(den)));
}

std::uint64_t random_prime(std::mt19937_64& rng, unsigned bits) {
  const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
  const std::uint64_t start = lo | (rng() & (lo - 1));
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(start), 0, 0, &start);
  mpz_class prime;
  mpz_nextprime(prime.get_mpz_t(), z.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, prime.get_mpz_t());
  return out;
}

namespace {

std::vector<FieldRow<RationalField>> rational_rows(const std::vector<SparseVector>& vectors) {
  std::vector<FieldRow<RationalField>> rows(vectors.size());
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    rows[r].reserve(vectors[r].size());
    for (const auto& t : vectors[r]) rows[r].emplace_back(t.index, t.value);
  }
  return rows;
}

SparseVector to_sparse(const FieldRow<RationalField>& row) {
  SparseVector out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.push_back(Term{c, v});
  return out;
}

// Reduced row echelon form, rows sorted by pivot.
std::vector<SparseVector> rref(std::size_t ambient, const std::vector<SparseVector>& vectors) {
  RationalField f;
  auto pivots = detail::eliminate(f, ambient, rational_rows(vectors));
  // Markowitz pivots are not leading entries; re-pivot on the leading column.
  std::vector<SparseVector> lead;
  {
    std::map<std::size_t, SparseVector> by_pivot;
    for (const auto& p : pivots) {
      SparseVector v = to_sparse(p.terms);
      while (!v.empty()) {
        auto it = by_pivot.find(v.front().index);
        if (it == by_pivot.end()) break;
        v = axpy(v, -v.front().value, it->second);
      }
      if (v.empty()) continue;
      v = scaled(v, 1 / v.front().value);
      by_pivot.emplace(v.front().index, std::move(v));
    }
    // Back-reduce from the largest pivot downwards.
    std::vector<std::size_t> keys;
    for (const auto& [k, v] : by_pivot) keys.push_back(k);
    for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
      const SparseVector& row = by_pivot[*it];
      for (auto& [k, other] : by_pivot) {
        if (k >= *it) break;
        auto pos = std::lower_bound(other.begin(), other.end(), *it,
                                    [](const Term& t, std::size_t i) { return t.index < i; });
        if (pos != other.end() && pos->index == *it) other = axpy(other, -pos->value, row);
      }
    }
    for (auto& [k, v] : by_pivot) lead.push_back(std::move(v));
  }
  return lead;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  RationalField f;
  if (m.rows() <= m.cols()) return detail::eliminate(f, m.cols(), rational_rows(m.row_vectors())).size();
  return detail::eliminate(f, m.rows(), rational_rows(m.column_vectors())).size();
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  PrimeField f(p);
  std::vector<FieldRow<PrimeField>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& t : m.row(r)) {
      auto v = f.from_rational(t.value);
      if (!f.is_zero(v)) rows[r].emplace_back(t.index, v);
    }
  }
  return detail::eliminate(f, m.cols(), std::move(rows)).size();
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors) {
  for (const auto& v : vectors) {
    if (!v.empty() && v.back().index >= ambient_dim) throw MathError("vector outside ambient space");
  }
  Subspace s(ambient_dim);
  s.basis_ = rref(ambient_dim, vectors);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.basis_.push_back(unit_vector(i));
  return s;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(basis_.size());
  for (const auto& v : basis_) out.push_back(v.front().index);
  return out;
}

bool Subspace::contains(const SparseVector& v) const {
  SparseVector r = v;
  for (const auto& row : basis_) {
    const std::size_t p = row.front().index;
    auto pos = std::lower_bound(r.begin(), r.end(), p, [](const Term& t, std::size_t i) { return t.index < i; });
    if (pos != r.end() && pos->index == p) r = axpy(r, -pos->value, row);
  }
  return r.empty();
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const SparseVector& v) { return contains(v); });
}

SparseMatrix Subspace::inclusion() const { return SparseMatrix::from_columns(ambient_, basis_); }

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw MathError("subspaces of different spaces");
  auto vectors = a.basis();
  vectors.insert(vectors.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), vectors);
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  RationalField f;
  auto pivots = detail::eliminate(f, m.cols(), rational_rows(m.row_vectors()));
  std::vector<char> is_pivot(m.cols(), 0);
  for (const auto& p : pivots) is_pivot[p.pivot] = 1;
  std::vector<SparseVector> out;
  std::vector<Rational> x(m.cols());
  std::vector<std::size_t> touched;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    touched.clear();
    x[free] = 1;
    touched.push_back(free);
    // Row k vanishes on earlier pivots, so solve in reverse pivot order.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Rational s = 0;
      for (const auto& [c, v] : it->terms) {
        if (c != it->pivot && !is_zero(x[c])) s += v * x[c];
      }
      if (!is_zero(s)) {
        x[it->pivot] = -s;
        touched.push_back(it->pivot);
      }
    }
    std::sort(touched.begin(), touched.end());
    SparseVector v;
    for (std::size_t c : touched) {
      if (!is_zero(x[c])) v.push_back(Term{c, x[c]});
      x[c] = 0;
    }
    out.push_back(std::move(v));
  }
  return out;
}

Subspace kernel(const SparseMatrix& m) { return Subspace::span(m.cols(), kernel_basis(m)); }

Subspace image(const SparseMatrix& m) { return Subspace::span(m.rows(), m.column_vectors()); }

QuotientPresentation quotient_presentation(std::size_t ambient_dim, const Subspace& sub) {
  if (sub.ambient_dim() != ambient_dim) throw MathError("subspace lives in a different space");
  std::vector<std::ptrdiff_t> coord(ambient_dim, -1);
  std::vector<char> pivot(ambient_dim, 0);
  for (std::size_t p : sub.pivots()) pivot[p] = 1;
  std::size_t dim = 0;
  std::vector<Triplet> section;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    if (pivot[i]) continue;
    coord[i] = static_cast<std::ptrdiff_t>(dim);
    section.push_back(Triplet{i, dim, Rational(1)});
    ++dim;
  }
  std::vector<Triplet> projection;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    if (coord[i] >= 0) projection.push_back(Triplet{static_cast<std::size_t>(coord[i]), i, Rational(1)});
  }
  for (const auto& row : sub.basis()) {
    const std::size_t p = row.front().index;
    for (const auto& t : row) {
      if (t.index == p) continue;
      projection.push_back(Triplet{static_cast<std::size_t>(coord[t.index]), p, -t.value});
    }
  }
  return QuotientPresentation{dim, SparseMatrix::from_triplets(dim, ambient_dim, std::move(projection)),
                              SparseMatrix::from_triplets(ambient_dim, dim, std::move(section))};
}

namespace {

// Dense scratch space reused across reductions on the same thread.
struct Workspace {
  std::vector<Rational> values;
  std::vector<char> present;
  std::vector<std::size_t> touched;

  void prepare(std::size_t n) {
    if (values.size() < n) {
      values.resize(n);
      present.resize(n, 0);
    }
    touched.clear();
  }
  void add(std::size_t i, const Rational& v) {
    if (!present[i]) {
      present[i] = 1;
      values[i] = v;
      touched.push_back(i);
    } else {
      values[i] += v;
    }
  }
  SparseVector extract() {
    std::sort(touched.begin(), touched.end());
    SparseVector out;
    for (std::size_t i : touched) {
      if (!is_zero(values[i])) out.push_back(Term{i, values[i]});
      present[i] = 0;
    }
    touched.clear();
    return out;
  }
};

thread_local Workspace tls_workspace;

}  // namespace

EchelonBasis::EchelonBasis(std::size_t ambient_dim) : ambient_(ambient_dim), row_of_pivot_(ambient_dim, -1) {}

EchelonBasis EchelonBasis::from_spanning(std::size_t ambient_dim, const std::vector<SparseVector>& vectors) {
  RationalField f;
  EchelonBasis out(ambient_dim);
  for (auto& p : detail::eliminate(f, ambient_dim, rational_rows(vectors))) {
    out.row_of_pivot_[p.pivot] = static_cast<std::ptrdiff_t>(out.rows_.size());
    out.rows_.push_back(Row{p.pivot, to_sparse(p.terms), {}});
  }
  return out;
}

EchelonBasis::Reduction EchelonBasis::reduce(const SparseVector& v) const {
  Workspace& ws = tls_workspace;
  ws.prepare(ambient_);
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> pending;
  for (const auto& t : v) {
    if (t.index >= ambient_) throw MathError("vector outside ambient space");
    ws.add(t.index, t.value);
    if (row_of_pivot_[t.index] >= 0) pending.push(static_cast<std::size_t>(row_of_pivot_[t.index]));
  }
  std::map<std::size_t, Rational> tag;
  std::size_t last = static_cast<std::size_t>(-1);
  while (!pending.empty()) {
    const std::size_t k = pending.top();
    pending.pop();
    if (k == last) continue;
    last = k;
    const Row& row = rows_[k];
    if (!ws.present[row.pivot] || is_zero(ws.values[row.pivot])) continue;
    const Rational factor = ws.values[row.pivot];
    for (const auto& t : row.terms) {
      const bool was_present = ws.present[t.index] && !is_zero(ws.values[t.index]);
      ws.add(t.index, -factor * t.value);
      if (!was_present && row_of_pivot_[t.index] > static_cast<std::ptrdiff_t>(k)) {
        pending.push(static_cast<std::size_t>(row_of_pivot_[t.index]));
      }
    }
    for (const auto& t : row.tag) tag[t.index] += factor * t.value;
  }
  Reduction out;
  out.remainder = ws.extract();
  for (auto& [i, value] : tag) {
    if (!is_zero(value)) out.tag.push_back(Term{i, value});
  }
  return out;
}

bool EchelonBasis::insert(const SparseVector& v, const SparseVector& tag) {
  auto red = reduce(v);
  if (red.remainder.empty()) return false;
  const Rational scale = 1 / red.remainder.front().value;
  Row row;
  row.pivot = red.remainder.front().index;
  row.terms = scaled(red.remainder, scale);
  row.tag = scaled(axpy(tag, Rational(-1), red.tag), scale);
  row_of_pivot_[row.pivot] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

LinearSolver::LinearSolver(const SparseMatrix& m) : basis_(m.rows()) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto col = m.column(c);
    basis_.insert(SparseVector(col.begin(), col.end()), unit_vector(c));
  }
}

std::optional<SparseVector> LinearSolver::solve(const SparseVector& y) const {
  auto red = basis_.reduce(y);
  if (!red.remainder.empty()) return std::nullopt;
  return red.tag;
}

SparseVector LinearSolver::solve_or_throw(const SparseVector& y) const {
  auto x = solve(y);
  if (!x) throw InternalError("vector is not in the column span");
  return *x;
}

Subquotient subquotient(std::size_t ambient_dim, const std::vector<SparseVector>& cycles,
                        const std::vector<SparseVector>& boundaries) {
  EchelonBasis basis = EchelonBasis::from_spanning(ambient_dim, boundaries);
  Subquotient out{0, {}};
  for (const auto& z : cycles) {
    if (basis.insert(z)) out.representatives.push_back(z);
  }
  out.dim = out.representatives.size();
  return out;
}

SparseMatrix inverse(const SparseMatrix& m) {
  if (m.rows() != m.cols() || rank(m) != m.rows()) throw MathError("matrix is not invertible");
  LinearSolver solver(m);
  std::vector<SparseVector> cols;
  cols.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) cols.push_back(solver.solve_or_throw(unit_vector(i)));
  return SparseMatrix::from_columns(m.rows(), cols);
}

}  // namespace xch
