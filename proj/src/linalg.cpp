#include "cdgl/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdgl {

SparseVector sparse_from_dense(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) v.emplace_back(i, dense[i]);
  }
  return v;
}

std::vector<Rational> dense_from_sparse(const SparseVector& v, std::size_t size) {
  std::vector<Rational> dense(size);
  for (const auto& [i, c] : v) dense.at(i) = c;
  return dense;
}

void axpy(SparseVector& y, const Rational& c, const SparseVector& x) {
  if (c == 0 || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  Rational tmp;
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy));
      ++iy;
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, c * ix->second);
      ++ix;
    } else {
      tmp = c * ix->second;
      tmp += iy->second;
      if (tmp != 0) out.emplace_back(iy->first, tmp);
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

SparseVector scaled(const SparseVector& v, const Rational& c) {
  SparseVector out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, c * x);
  return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

void SparseMatrix::set(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("SparseMatrix::set index out of range");
  if (value == 0) {
    entries_.erase({col, row});
  } else {
    entries_[{col, row}] = value;
  }
}

Rational SparseMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("SparseMatrix::at index out of range");
  auto it = entries_.find({col, row});
  return it == entries_.end() ? Rational(0) : it->second;
}

SparseVector SparseMatrix::column(std::size_t col) const {
  SparseVector v;
  for (auto it = entries_.lower_bound({col, 0}); it != entries_.end() && it->first.first == col; ++it) {
    v.emplace_back(it->first.second, it->second);
  }
  return v;
}

std::vector<SparseVector> SparseMatrix::columns() const {
  std::vector<SparseVector> cols(cols_);
  for (const auto& [key, value] : entries_) cols[key.first].emplace_back(key.second, value);
  return cols;
}

std::vector<Rational> SparseMatrix::multiply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("SparseMatrix::multiply dimension mismatch");
  std::vector<Rational> y(rows_);
  for (const auto& [key, value] : entries_) y[key.second] += value * x[key.first];
  return y;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

SparseMatrix SparseMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void Echelon::eliminate(SparseVector& v, SparseVector* history) const {
  // Pivots are distinct leading indices, so a leading entry with no pivot
  // already proves independence.
  while (!v.empty()) {
    auto it = pivot_of_.find(v.front().first);
    if (it == pivot_of_.end()) return;
    Rational c = -v.front().second;
    axpy(v, c, basis_[it->second]);
    if (history != nullptr) axpy(*history, c, history_[it->second]);
  }
}

std::optional<SparseVector> Echelon::insert(SparseVector v, std::size_t tag) {
  SparseVector hist;
  if (track_history_) hist.emplace_back(tag, Rational(1));
  eliminate(v, track_history_ ? &hist : nullptr);
  if (v.empty()) return hist;
  Rational inv = 1 / v.front().second;
  if (inv != 1) {
    for (auto& [i, c] : v) c *= inv;
    for (auto& [i, c] : hist) c *= inv;
  }
  pivot_of_.emplace(v.front().first, basis_.size());
  basis_.push_back(std::move(v));
  if (track_history_) history_.push_back(std::move(hist));
  return std::nullopt;
}

bool Echelon::reduce(SparseVector v, SparseVector* combination) const {
  SparseVector hist;
  const bool want = combination != nullptr && track_history_;
  eliminate(v, want ? &hist : nullptr);
  if (!v.empty()) return false;
  if (want) {
    // eliminate accumulated -sum c h; the combination is its negative
    for (auto& [i, c] : hist) c = -c;
    *combination = std::move(hist);
  }
  return true;
}

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m) {
  Echelon ech(true);
  std::vector<std::vector<Rational>> out;
  auto cols = m.columns();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (auto relation = ech.insert(std::move(cols[j]), j)) {
      // scale so the first nonzero coordinate is 1
      Rational lead = 1 / relation->front().second;
      out.push_back(dense_from_sparse(scaled(*relation, lead), m.cols()));
    }
  }
  return out;
}

std::size_t rank(const SparseMatrix& m) {
  Echelon ech(false);
  auto cols = m.columns();
  for (std::size_t j = 0; j < cols.size(); ++j) ech.insert(std::move(cols[j]), j);
  return ech.rank();
}

std::optional<std::vector<Rational>> solve(const SparseMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  Echelon ech(true);
  auto cols = m.columns();
  for (std::size_t j = 0; j < cols.size(); ++j) ech.insert(std::move(cols[j]), j);
  SparseVector combination;
  if (!ech.reduce(sparse_from_dense(b), &combination)) return std::nullopt;
  return dense_from_sparse(combination, m.cols());
}

}  // namespace cdgl
