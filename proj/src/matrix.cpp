#include "gnc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gnc {

namespace {
const Rat kZero = 0;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

const Rat& RatMatrix::at(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? kZero : it->second;
}

void RatMatrix::set(std::size_t r, std::size_t c, const Rat& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("RatMatrix::set");
  if (value == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = value;
}

void RatMatrix::add_to(std::size_t r, std::size_t c, const Rat& value) {
  set(r, c, at(r, c) + value);
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (const auto& [key, v] : entries_) t.set(key.second, key.first, v);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("RatMatrix: size mismatch in product");
  /* row-major view of rhs, then one pass over our entries */
  std::vector<std::vector<std::pair<std::size_t, Rat>>> rhs_rows(rhs.rows_);
  for (const auto& [key, v] : rhs.entries_) rhs_rows[key.first].emplace_back(key.second, v);
  RatMatrix out(rows_, rhs.cols_);
  for (const auto& [key, v] : entries_)
    for (const auto& [c, w] : rhs_rows[key.second]) out.add_to(key.first, c, v * w);
  return out;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RatMatrix: size mismatch in apply");
  std::vector<Rat> out(rows_, Rat(0));
  for (const auto& [key, val] : entries_) out[key.first] += val * v[key.second];
  return out;
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rat>>;

/* acc -= f * row, acc kept sorted by column */
void subtract_scaled(SparseRow& acc, const Rat& f, const SparseRow& row) {
  SparseRow merged;
  merged.reserve(acc.size() + row.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < row.size()) {
    if (j == row.size() || (i < acc.size() && acc[i].first < row[j].first)) {
      merged.push_back(std::move(acc[i++]));
    } else if (i == acc.size() || row[j].first < acc[i].first) {
      merged.emplace_back(row[j].first, -f * row[j].second);
      ++j;
    } else {
      Rat v = acc[i].second - f * row[j].second;
      if (v != 0) merged.emplace_back(acc[i].first, std::move(v));
      ++i, ++j;
    }
  }
  acc = std::move(merged);
}

struct EchelonState {
  bool reduced;
  std::vector<std::size_t> pivot_cols;          // ascending insertion? no: sorted view built on demand
  std::map<std::size_t, std::size_t> pivot_of;  // column -> row slot
  std::vector<SparseRow> rows;

  explicit EchelonState(bool reduce) : reduced(reduce) {}

  /* Reduce an incoming row against the current pivots; if something is left,
     normalize it and install it as a new pivot row.  Returns false when the
     row was dependent. */
  bool absorb(SparseRow row) {
    std::size_t scan_from = 0;
    while (!row.empty()) {
      auto it = std::lower_bound(row.begin(), row.end(), scan_from,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      bool hit = false;
      for (; it != row.end(); ++it) {
        auto p = pivot_of.find(it->first);
        if (p != pivot_of.end()) {
          scan_from = it->first + 1;
          Rat f = it->second;
          subtract_scaled(row, f, rows[p->second]);
          hit = true;
          break;
        }
      }
      if (!hit) break;
    }
    if (row.empty()) return false;

    Rat lead = row.front().second;
    if (lead != 1)
      for (auto& e : row) e.second /= lead;
    std::size_t col = row.front().first;
    if (reduced) {
      for (auto& [pc, slot] : pivot_of) {
        auto& prow = rows[slot];
        auto it = std::lower_bound(prow.begin(), prow.end(), col,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        if (it != prow.end() && it->first == col) {
          Rat f = it->second;
          subtract_scaled(prow, f, row);
        }
        (void)pc;
      }
    }
    pivot_of[col] = rows.size();
    rows.push_back(std::move(row));
    return true;
  }
};

std::vector<SparseRow> sparse_rows_of(const RatMatrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (const auto& [key, v] : m.entries()) rows[key.first].emplace_back(key.second, v);
  return rows;  // map iteration is (row, col)-sorted, so each row is sorted
}

Echelon run_elimination(const RatMatrix& m, bool reduce) {
  EchelonState st(reduce);
  for (auto& row : sparse_rows_of(m))
    if (!row.empty()) st.absorb(std::move(row));
  Echelon e;
  e.rank = st.rows.size();
  for (const auto& [col, slot] : st.pivot_of) {
    e.pivot_cols.push_back(col);
    e.rows.push_back(st.rows[slot]);
  }
  return e;
}

}  // namespace

Echelon reduced_row_echelon(const RatMatrix& m) { return run_elimination(m, true); }

std::size_t rank(const RatMatrix& m) { return run_elimination(m, false).rank; }

RankKernel rank_and_kernel(const RatMatrix& m) {
  Echelon e = reduced_row_echelon(m);
  RankKernel out;
  out.rank = e.rank;

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  /* one kernel vector per free column, then canonicalize the lot */
  RatMatrix kmat(m.cols() - e.rank, m.cols());
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    kmat.set(k, f, 1);
    for (std::size_t p = 0; p < e.pivot_cols.size(); ++p) {
      auto& row = e.rows[p];
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& en, std::size_t c) { return en.first < c; });
      if (it != row.end() && it->first == f) kmat.set(k, e.pivot_cols[p], -it->second);
    }
    ++k;
  }
  Echelon ke = reduced_row_echelon(kmat);
  for (const auto& row : ke.rows) {
    std::vector<Rat> dense(m.cols(), Rat(0));
    for (const auto& [c, v] : row) dense[c] = v;
    out.kernel.push_back(std::move(dense));
  }
  return out;
}

std::vector<std::vector<Rat>> column_space_basis(const RatMatrix& m) {
  Echelon e = reduced_row_echelon(m.transpose());
  std::vector<std::vector<Rat>> basis;
  for (const auto& row : e.rows) {
    std::vector<Rat> dense(m.rows(), Rat(0));
    for (const auto& [c, v] : row) dense[c] = v;
    basis.push_back(std::move(dense));
  }
  return basis;
}

std::optional<std::vector<Rat>> solve_in_span(
    const std::vector<std::vector<Rat>>& cols, const std::vector<Rat>& rhs) {
  std::size_t n = cols.size(), m = rhs.size();
  for (const auto& c : cols)
    if (c.size() != m) throw std::invalid_argument("solve_in_span: ragged columns");

  /* Gauss-Jordan on the augmented system [cols | rhs] */
  RatMatrix aug(m, n + 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      if (cols[j][i] != 0) aug.set(i, j, cols[j][i]);
  for (std::size_t i = 0; i < m; ++i)
    if (rhs[i] != 0) aug.set(i, n, rhs[i]);

  Echelon e = reduced_row_echelon(aug);
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t p = 0; p < e.pivot_cols.size(); ++p) {
    if (e.pivot_cols[p] == n) return std::nullopt;  // rhs independent of the span
    const auto& row = e.rows[p];
    x[e.pivot_cols[p]] = row.empty() || row.back().first != n ? Rat(0) : row.back().second;
  }
  return x;
}

}  // namespace gnc
