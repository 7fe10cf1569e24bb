#pragma once

// Field-generic sparse row elimination used by rank, kernel and image.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace xch::detail {

template <class Field>
using FieldRow = std::vector<std::pair<std::size_t, typename Field::Element>>;

// A normalized pivot row (entry at `pivot` is one). The sequence returned by
// the eliminators is triangular: row k vanishes at the pivots of rows < k.
template <class Field>
struct PivotRow {
  std::size_t pivot;
  FieldRow<Field> terms;
};

template <class Field>
FieldRow<Field> row_axpy(const Field& f, const FieldRow<Field>& a, const typename Field::Element& factor,
                         const FieldRow<Field>& b) {
  FieldRow<Field> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f.mul(factor, b[j].second));
      ++j;
    } else {
      auto v = f.add(a[i].second, f.mul(factor, b[j].second));
      if (!f.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Field>
FieldRow<Field> normalized(const Field& f, const FieldRow<Field>& row, std::size_t pivot) {
  typename Field::Element scale = f.zero();
  for (const auto& [c, v] : row) {
    if (c == pivot) scale = f.inv(v);
  }
  FieldRow<Field> out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.emplace_back(c, c == pivot ? f.one() : f.mul(v, scale));
  return out;
}

// Dense Gaussian elimination, lowest-row pivot in increasing column order.
template <class Field>
std::vector<PivotRow<Field>> dense_eliminate(const Field& f, std::size_t ncols, const std::vector<FieldRow<Field>>& rows) {
  using E = typename Field::Element;
  std::vector<std::vector<E>> a(rows.size(), std::vector<E>(ncols, f.zero()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) a[r][c] = v;
  }
  std::vector<char> used(rows.size(), 0);
  std::vector<PivotRow<Field>> out;
  for (std::size_t c = 0; c < ncols; ++c) {
    std::size_t pr = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!used[r] && !f.is_zero(a[r][c])) {
        pr = r;
        break;
      }
    }
    if (pr == rows.size()) continue;
    used[pr] = 1;
    const E scale = f.inv(a[pr][c]);
    for (std::size_t k = c; k < ncols; ++k) a[pr][k] = f.mul(a[pr][k], scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || f.is_zero(a[r][c])) continue;
      const E factor = f.neg(a[r][c]);
      for (std::size_t k = c; k < ncols; ++k) {
        if (!f.is_zero(a[pr][k])) a[r][k] = f.add(a[r][k], f.mul(factor, a[pr][k]));
      }
    }
    PivotRow<Field> p{c, {}};
    for (std::size_t k = c; k < ncols; ++k) {
      if (!f.is_zero(a[pr][k])) p.terms.emplace_back(k, a[pr][k]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

// Sparse elimination with Markowitz pivot search over the sparsest active
// columns. Among candidates the minimal (row_len-1)*(col_count-1) wins, ties
// broken by lowest (row, col).
template <class Field>
std::vector<PivotRow<Field>> markowitz_eliminate(const Field& f, std::size_t ncols, std::vector<FieldRow<Field>> rows,
                                                 std::size_t max_rank = std::numeric_limits<std::size_t>::max()) {
  constexpr std::size_t kCandidateColumns = 4;
  const std::size_t nrows = rows.size();
  std::vector<char> active(nrows, 1);
  std::vector<std::vector<std::size_t>> col_rows(ncols);
  std::vector<std::size_t> col_count(ncols, 0);
  std::set<std::pair<std::size_t, std::size_t>> queue;

  for (std::size_t r = 0; r < nrows; ++r) {
    if (rows[r].empty()) active[r] = 0;
    for (const auto& [c, v] : rows[r]) {
      col_rows[c].push_back(r);
      ++col_count[c];
    }
  }
  for (std::size_t c = 0; c < ncols; ++c) {
    if (col_count[c] > 0) queue.emplace(col_count[c], c);
  }
  auto change_count = [&](std::size_t c, long delta) {
    if (col_count[c] > 0) queue.erase({col_count[c], c});
    col_count[c] = static_cast<std::size_t>(static_cast<long>(col_count[c]) + delta);
    if (col_count[c] > 0) queue.emplace(col_count[c], c);
  };
  auto has_col = [&](std::size_t r, std::size_t c) {
    const auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& t, std::size_t i) { return t.first < i; });
    return it != row.end() && it->first == c;
  };
  auto compact = [&](std::size_t c) {
    auto& list = col_rows[c];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.erase(std::remove_if(list.begin(), list.end(), [&](std::size_t r) { return !active[r] || !has_col(r, c); }),
               list.end());
  };

  std::vector<PivotRow<Field>> out;
  while (!queue.empty() && out.size() < max_rank) {
    std::tuple<std::size_t, std::size_t, std::size_t> best{std::numeric_limits<std::size_t>::max(), 0, 0};
    std::size_t examined = 0;
    for (auto it = queue.begin(); it != queue.end() && examined < kCandidateColumns; ++it, ++examined) {
      const std::size_t c = it->second;
      compact(c);
      for (std::size_t r : col_rows[c]) {
        const std::size_t score = (rows[r].size() - 1) * (it->first - 1);
        best = std::min(best, std::make_tuple(score, r, c));
      }
    }
    const auto [score, pr, pc] = best;
    (void)score;
    compact(pc);
    FieldRow<Field> pivot = normalized(f, rows[pr], pc);
    active[pr] = 0;
    for (const auto& [c, v] : rows[pr]) change_count(c, -1);
    rows[pr].clear();

    for (std::size_t r : col_rows[pc]) {
      if (r == pr) continue;
      typename Field::Element factor = f.zero();
      for (const auto& [c, v] : rows[r]) {
        if (c == pc) factor = f.neg(v);
      }
      FieldRow<Field> next = row_axpy(f, rows[r], factor, pivot);
      // Update column bookkeeping from the symmetric difference of supports.
      std::size_t i = 0, j = 0;
      const auto& old = rows[r];
      while (i < old.size() || j < next.size()) {
        if (j == next.size() || (i < old.size() && old[i].first < next[j].first)) {
          change_count(old[i].first, -1);
          ++i;
        } else if (i == old.size() || next[j].first < old[i].first) {
          change_count(next[j].first, +1);
          col_rows[next[j].first].push_back(r);
          ++j;
        } else {
          ++i;
          ++j;
        }
      }
      rows[r] = std::move(next);
      if (rows[r].empty()) active[r] = 0;
    }
    col_rows[pc].clear();
    out.push_back(PivotRow<Field>{pc, std::move(pivot)});
  }
  return out;
}

// Dense path below 64x64, sparse Markowitz otherwise.
template <class Field>
std::vector<PivotRow<Field>> eliminate(const Field& f, std::size_t ncols, std::vector<FieldRow<Field>> rows) {
  if (rows.size() < 64 && ncols < 64) return dense_eliminate(f, ncols, rows);
  return markowitz_eliminate(f, ncols, std::move(rows));
}

}  // namespace xch::detail
