#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdgl/rational.hpp"

namespace cdgl {

/// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector sparse_from_dense(const std::vector<Rational>& dense);
std::vector<Rational> dense_from_sparse(const SparseVector& v, std::size_t size);
/// y <- y + c * x
void axpy(SparseVector& y, const Rational& c, const SparseVector& x);
SparseVector scaled(const SparseVector& v, const Rational& c);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Setting zero erases the entry. Out-of-range indices throw.
  void set(std::size_t row, std::size_t col, const Rational& value);
  Rational at(std::size_t row, std::size_t col) const;
  std::size_t nonzeros() const { return entries_.size(); }

  /// Column c as a sparse vector over row indices.
  SparseVector column(std::size_t col) const;
  std::vector<SparseVector> columns() const;

  std::vector<Rational> multiply(const std::vector<Rational>& x) const;

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  // Keyed (col, row) so column extraction is a contiguous range.
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

/// Incremental row echelon form of a set of sparse vectors. Every stored
/// vector is normalised to leading coefficient 1 at a distinct pivot index;
/// optionally each stored vector remembers which combination of inserted
/// vectors produced it.
class Echelon {
 public:
  explicit Echelon(bool track_history = false) : track_history_(track_history) {}

  /// Inserts v, tagged with `tag` for the history. Returns std::nullopt when v
  /// was independent of the current span. Otherwise returns the combination of
  /// previously inserted tags, plus `tag` with coefficient 1, that vanishes
  /// (empty when history is off).
  std::optional<SparseVector> insert(SparseVector v, std::size_t tag);

  /// Reduces v against the span. Returns true when v lies in the span, in
  /// which case *combination (if given) holds tag coefficients c with
  /// v = sum c_tag * inserted_tag.
  bool reduce(SparseVector v, SparseVector* combination = nullptr) const;

  std::size_t rank() const { return basis_.size(); }

 private:
  // Eliminates leading entries that hit a pivot; stops at the first leading
  // entry without one.
  void eliminate(SparseVector& v, SparseVector* history) const;

  bool track_history_;
  std::vector<SparseVector> basis_;
  std::vector<SparseVector> history_;
  std::unordered_map<std::size_t, std::size_t> pivot_of_;
};

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);

/// Exact solution of m x = b, or std::nullopt when the system is inconsistent.
/// Throws std::invalid_argument on a dimension mismatch.
std::optional<std::vector<Rational>> solve(const SparseMatrix& m, const std::vector<Rational>& b);

}  // namespace cdgl
