#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fusionlab/prime_field.hpp"

namespace fusionlab {

using Vector = std::vector<Residue>;

struct Entry {
  std::uint32_t col;
  Residue value;
  friend bool operator==(const Entry&, const Entry&) = default;
};
using SparseRow = std::vector<Entry>;

/// Matrix over F_p acting on column vectors. Rows are kept sparse unless the
/// fill ratio exceeds 25%, in which case a dense row-major array is used.
class FpMatrix {
 public:
  struct Triplet {
    std::size_t row;
    std::size_t col;
    std::int64_t value;
  };

  FpMatrix(Prime p, std::size_t rows, std::size_t cols);

  static FpMatrix identity(Prime p, std::size_t n);
  static FpMatrix from_rows(Prime p, std::size_t cols, const std::vector<Vector>& rows);
  /// Duplicate positions are summed mod p.
  static FpMatrix from_triplets(Prime p, std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);

  Prime prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_dense() const { return dense_; }
  std::size_t nonzeros() const;

  Residue at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Residue v);

  Vector row(std::size_t r) const;
  SparseRow sparse_row(std::size_t r) const;
  Vector column(std::size_t c) const;

  FpMatrix transpose() const;
  /// A·x
  Vector apply(const Vector& x) const;
  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  bool is_zero() const;
  bool is_identity() const;

  /// Switches storage according to the current fill ratio.
  void choose_storage();

  friend bool operator==(const FpMatrix& a, const FpMatrix& b);

 private:
  void to_dense();
  void to_sparse();

  Prime p_;
  std::size_t rows_;
  std::size_t cols_;
  bool dense_ = false;
  std::vector<SparseRow> sparse_;
  std::vector<Residue> data_;
};

/// Incrementally maintained reduced row echelon basis.
class RowEchelon {
 public:
  RowEchelon(Prime p, std::size_t cols);

  /// Adds v to the span; returns false when v was already in it.
  bool insert(Vector v);
  /// Fully reduces v against the current basis.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;
  /// Basis rows ordered by pivot column (the RREF).
  std::vector<Vector> basis() const;

 private:
  Prime p_;
  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<std::int64_t> row_of_col_;
};

/// Span of a fixed list of generator vectors, with the ability to express a
/// vector of the span as a combination of the generators.
class SpanCoordinates {
 public:
  SpanCoordinates(Prime p, std::size_t ambient, const std::vector<Vector>& generators);

  /// x with v = Σ x_j g_j, or nullopt when v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  Prime p_;
  std::size_t ambient_;
  std::size_t count_;
  std::vector<Vector> rows_;
  std::vector<Vector> combos_;
  std::vector<std::int64_t> row_of_col_;
};

/// Subspace of F_p^n stored as an RREF basis.
class FpSubspace {
 public:
  FpSubspace(Prime p, std::size_t ambient);
  static FpSubspace span(Prime p, std::size_t ambient, const std::vector<Vector>& vectors);
  static FpSubspace whole(Prime p, std::size_t ambient);

  Prime prime() const { return p_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  FpMatrix basis_matrix() const;

  bool contains(const Vector& v) const;
  bool contains(const FpSubspace& other) const;

  friend bool operator==(const FpSubspace& a, const FpSubspace& b) {
    return a.p_ == b.p_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Prime p_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  FpMatrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const FpMatrix& a);
/// {x : A x = 0}
FpSubspace kernel(const FpMatrix& a);
/// Column space of A.
FpSubspace image(const FpMatrix& a);
FpSubspace intersect(const FpSubspace& u, const FpSubspace& v);
FpSubspace sum(const FpSubspace& u, const FpSubspace& v);
std::optional<Vector> solve(const FpMatrix& a, const Vector& b);
/// Vectors of Z completing a basis of B to a basis of Z (first-pivot
/// extension). Requires B ⊆ Z.
std::vector<Vector> quotient_basis(const FpSubspace& z, const FpSubspace& b);

/// Stacks matrices with equal column counts.
FpMatrix vstack(const std::vector<FpMatrix>& blocks, Prime p, std::size_t cols);

}  // namespace fusionlab
