#include "fusionlab/fp_linalg.hpp"

#include <algorithm>
#include <string>

namespace fusionlab {

namespace {

constexpr double kDenseFill = 0.25;

void check_vector(const Vector& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw InvalidInput(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                       " where " + std::to_string(n) + " was expected");
  }
}

/// dst[from..] -= factor * src[from..]
void axpy_neg(Vector& dst, const Vector& src, Residue factor, std::size_t from, Prime p) {
  const Residue f = fp::neg(factor, p);
  const std::uint64_t m = p.value();
  for (std::size_t j = from; j < dst.size(); ++j) {
    if (src[j] != 0) dst[j] = static_cast<Residue>((dst[j] + static_cast<std::uint64_t>(f) * src[j]) % m);
  }
}

void scale(Vector& v, Residue factor, Prime p) {
  for (auto& x : v) x = fp::mul(x, factor, p);
}

}  // namespace

// ---------------------------------------------------------------------------
// FpMatrix

FpMatrix::FpMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), sparse_(rows) {}

FpMatrix FpMatrix::identity(Prime p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.sparse_[i].push_back({static_cast<std::uint32_t>(i), 1});
  m.choose_storage();
  return m;
}

FpMatrix FpMatrix::from_rows(Prime p, std::size_t cols, const std::vector<Vector>& rows) {
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    check_vector(rows[r], cols, "FpMatrix::from_rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const Residue v = rows[r][c] % p.value();
      if (v != 0) m.sparse_[r].push_back({static_cast<std::uint32_t>(c), v});
    }
  }
  m.choose_storage();
  return m;
}

FpMatrix FpMatrix::from_triplets(Prime p, std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  FpMatrix m(p, rows, cols);
  for (std::size_t i = 0; i < triplets.size();) {
    const auto& t = triplets[i];
    if (t.row >= rows || t.col >= cols) throw InvalidInput("triplet outside the matrix");
    std::int64_t acc = 0;
    std::size_t j = i;
    while (j < triplets.size() && triplets[j].row == t.row && triplets[j].col == t.col) {
      acc += triplets[j].value;
      acc %= static_cast<std::int64_t>(p.value());
      ++j;
    }
    const Residue v = fp::reduce(acc, p);
    if (v != 0) m.sparse_[t.row].push_back({static_cast<std::uint32_t>(t.col), v});
    i = j;
  }
  m.choose_storage();
  return m;
}

std::size_t FpMatrix::nonzeros() const {
  if (dense_) return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](Residue v) { return v != 0; }));
  std::size_t n = 0;
  for (const auto& r : sparse_) n += r.size();
  return n;
}

Residue FpMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw InvalidInput("matrix index out of range");
  if (dense_) return data_[r * cols_ + c];
  const auto& row = sparse_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  return (it != row.end() && it->col == c) ? it->value : 0;
}

void FpMatrix::set(std::size_t r, std::size_t c, Residue v) {
  if (r >= rows_ || c >= cols_) throw InvalidInput("matrix index out of range");
  v %= p_.value();
  if (dense_) {
    data_[r * cols_ + c] = v;
    return;
  }
  auto& row = sparse_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (v == 0) {
      row.erase(it);
    } else {
      it->value = v;
    }
  } else if (v != 0) {
    row.insert(it, {static_cast<std::uint32_t>(c), v});
  }
}

Vector FpMatrix::row(std::size_t r) const {
  Vector out(cols_, 0);
  if (dense_) {
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_), out.begin());
  } else {
    for (const auto& e : sparse_[r]) out[e.col] = e.value;
  }
  return out;
}

SparseRow FpMatrix::sparse_row(std::size_t r) const {
  if (!dense_) return sparse_[r];
  SparseRow out;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (data_[r * cols_ + c] != 0) out.push_back({static_cast<std::uint32_t>(c), data_[r * cols_ + c]});
  }
  return out;
}

Vector FpMatrix::column(std::size_t c) const {
  Vector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : sparse_row(r)) t.sparse_[e.col].push_back({static_cast<std::uint32_t>(r), e.value});
  }
  t.choose_storage();
  return t;
}

Vector FpMatrix::apply(const Vector& x) const {
  check_vector(x, cols_, "FpMatrix::apply");
  Vector out(rows_, 0);
  const std::uint64_t m = p_.value();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    if (dense_) {
      for (std::size_t c = 0; c < cols_; ++c) acc = (acc + static_cast<std::uint64_t>(data_[r * cols_ + c]) * x[c]) % m;
    } else {
      for (const auto& e : sparse_[r]) acc = (acc + static_cast<std::uint64_t>(e.value) * x[e.col]) % m;
    }
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_ || !(p_ == rhs.p_)) throw InvalidInput("matrix product dimension mismatch");
  FpMatrix out(p_, rows_, rhs.cols_);
  const std::uint64_t m = p_.value();
  std::vector<std::uint64_t> acc(rhs.cols_, 0);
  std::vector<std::uint32_t> touched;
  std::vector<bool> mark(rhs.cols_, false);
  std::vector<SparseRow> rhs_rows(rhs.rows_);
  for (std::size_t k = 0; k < rhs.rows_; ++k) rhs_rows[k] = rhs.sparse_row(k);
  for (std::size_t r = 0; r < rows_; ++r) {
    touched.clear();
    for (const auto& e : sparse_row(r)) {
      for (const auto& f : rhs_rows[e.col]) {
        if (!mark[f.col]) {
          mark[f.col] = true;
          touched.push_back(f.col);
        }
        acc[f.col] = (acc[f.col] + static_cast<std::uint64_t>(e.value) * f.value) % m;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (auto c : touched) {
      if (acc[c] != 0) out.sparse_[r].push_back({c, static_cast<Residue>(acc[c])});
      acc[c] = 0;
      mark[c] = false;
    }
  }
  out.choose_storage();
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix sum dimension mismatch");
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : sparse_row(r)) t.push_back({r, e.col, e.value});
    for (const auto& e : rhs.sparse_row(r)) t.push_back({r, e.col, e.value});
  }
  return from_triplets(p_, rows_, cols_, std::move(t));
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix difference dimension mismatch");
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : sparse_row(r)) t.push_back({r, e.col, e.value});
    for (const auto& e : rhs.sparse_row(r)) t.push_back({r, e.col, -static_cast<std::int64_t>(e.value)});
  }
  return from_triplets(p_, rows_, cols_, std::move(t));
}

bool FpMatrix::is_zero() const { return nonzeros() == 0; }

bool FpMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto row = sparse_row(r);
    if (row.size() != 1 || row[0].col != r || row[0].value != 1) return false;
  }
  return true;
}

void FpMatrix::choose_storage() {
  const double total = static_cast<double>(rows_) * static_cast<double>(cols_);
  const bool want_dense = total > 0 && static_cast<double>(nonzeros()) > kDenseFill * total;
  if (want_dense && !dense_) to_dense();
  if (!want_dense && dense_) to_sparse();
}

void FpMatrix::to_dense() {
  data_.assign(rows_ * cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : sparse_[r]) data_[r * cols_ + e.col] = e.value;
  }
  sparse_.clear();
  sparse_.shrink_to_fit();
  dense_ = true;
}

void FpMatrix::to_sparse() {
  sparse_.assign(rows_, {});
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (data_[r * cols_ + c] != 0) sparse_[r].push_back({static_cast<std::uint32_t>(c), data_[r * cols_ + c]});
    }
  }
  data_.clear();
  data_.shrink_to_fit();
  dense_ = false;
}

bool operator==(const FpMatrix& a, const FpMatrix& b) {
  if (!(a.p_ == b.p_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    if (a.sparse_row(r) != b.sparse_row(r)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// RowEchelon

RowEchelon::RowEchelon(Prime p, std::size_t cols) : p_(p), cols_(cols), row_of_col_(cols, -1) {}

Vector RowEchelon::reduce(Vector v) const {
  check_vector(v, cols_, "RowEchelon::reduce");
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0 || row_of_col_[c] < 0) continue;
    // Pivot rows vanish on the other pivot columns, so each is hit once.
    axpy_neg(v, rows_[static_cast<std::size_t>(row_of_col_[c])], v[c], c, p_);
  }
  return v;
}

bool RowEchelon::contains(const Vector& v) const {
  const Vector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Residue x) { return x == 0; });
}

bool RowEchelon::insert(Vector v) {
  for (auto& x : v) x %= p_.value();
  v = reduce(std::move(v));
  std::size_t lead = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] != 0) {
      lead = c;
      break;
    }
  }
  if (lead == cols_) return false;
  scale(v, fp::inv(v[lead], p_), p_);
  for (auto& row : rows_) {
    if (row[lead] != 0) axpy_neg(row, v, row[lead], lead, p_);
  }
  row_of_col_[lead] = static_cast<std::int64_t>(rows_.size());
  pivot_of_row_.push_back(lead);
  rows_.push_back(std::move(v));
  return true;
}

std::vector<std::size_t> RowEchelon::pivots() const {
  std::vector<std::size_t> out = pivot_of_row_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vector> RowEchelon::basis() const {
  std::vector<Vector> out;
  out.reserve(rows_.size());
  for (auto c : pivots()) out.push_back(rows_[static_cast<std::size_t>(row_of_col_[c])]);
  return out;
}

// ---------------------------------------------------------------------------
// SpanCoordinates

SpanCoordinates::SpanCoordinates(Prime p, std::size_t ambient, const std::vector<Vector>& generators)
    : p_(p), ambient_(ambient), count_(generators.size()), row_of_col_(ambient, -1) {
  for (std::size_t j = 0; j < generators.size(); ++j) {
    check_vector(generators[j], ambient_, "SpanCoordinates");
    Vector v = generators[j];
    Vector combo(count_, 0);
    combo[j] = 1;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (v[c] == 0 || row_of_col_[c] < 0) continue;
      const auto r = static_cast<std::size_t>(row_of_col_[c]);
      const Residue f = v[c];
      axpy_neg(v, rows_[r], f, 0, p_);
      axpy_neg(combo, combos_[r], f, 0, p_);
    }
    std::size_t lead = ambient_;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (v[c] != 0) {
        lead = c;
        break;
      }
    }
    if (lead == ambient_) continue;
    const Residue s = fp::inv(v[lead], p_);
    scale(v, s, p_);
    scale(combo, s, p_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Residue f = rows_[r][lead];
      if (f == 0) continue;
      axpy_neg(rows_[r], v, f, 0, p_);
      axpy_neg(combos_[r], combo, f, 0, p_);
    }
    row_of_col_[lead] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
  }
}

std::optional<Vector> SpanCoordinates::coordinates(const Vector& target) const {
  check_vector(target, ambient_, "SpanCoordinates::coordinates");
  Vector v = target;
  Vector x(count_, 0);
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (v[c] == 0 || row_of_col_[c] < 0) continue;
    const auto r = static_cast<std::size_t>(row_of_col_[c]);
    const Residue f = v[c];
    axpy_neg(v, rows_[r], f, 0, p_);
    // x accumulates +f * combo
    axpy_neg(x, combos_[r], fp::neg(f, p_), 0, p_);
  }
  if (std::any_of(v.begin(), v.end(), [](Residue e) { return e != 0; })) return std::nullopt;
  return x;
}

// ---------------------------------------------------------------------------
// FpSubspace

FpSubspace::FpSubspace(Prime p, std::size_t ambient) : p_(p), ambient_(ambient) {}

FpSubspace FpSubspace::span(Prime p, std::size_t ambient, const std::vector<Vector>& vectors) {
  RowEchelon ech(p, ambient);
  for (const auto& v : vectors) {
    check_vector(v, ambient, "FpSubspace::span");
    ech.insert(v);
  }
  FpSubspace s(p, ambient);
  s.basis_ = ech.basis();
  s.pivots_ = ech.pivots();
  return s;
}

FpSubspace FpSubspace::whole(Prime p, std::size_t ambient) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector e(ambient, 0);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  return span(p, ambient, basis);
}

FpMatrix FpSubspace::basis_matrix() const { return FpMatrix::from_rows(p_, ambient_, basis_); }

bool FpSubspace::contains(const Vector& v) const {
  check_vector(v, ambient_, "FpSubspace::contains");
  Vector r = v;
  for (auto& x : r) x %= p_.value();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t c = pivots_[i];
    if (r[c] != 0) axpy_neg(r, basis_[i], r[c], 0, p_);
  }
  return std::all_of(r.begin(), r.end(), [](Residue x) { return x == 0; });
}

bool FpSubspace::contains(const FpSubspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

// ---------------------------------------------------------------------------
// Free functions

RrefResult rref(const FpMatrix& a) {
  RowEchelon ech(a.prime(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) ech.insert(a.row(r));
  auto basis = ech.basis();
  const std::size_t rank = basis.size();
  // Zero rows below the nonzero ones keep the shape of A.
  basis.resize(a.rows(), Vector(a.cols(), 0));
  return {FpMatrix::from_rows(a.prime(), a.cols(), basis), rank, ech.pivots()};
}

FpSubspace kernel(const FpMatrix& a) {
  const Prime p = a.prime();
  RowEchelon ech(p, a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    ech.insert(a.row(r));
    if (ech.rank() == a.cols()) break;
  }
  const auto basis = ech.basis();
  const auto pivots = ech.pivots();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> null_vectors;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) v[pivots[i]] = fp::neg(basis[i][f], p);
    null_vectors.push_back(std::move(v));
  }
  return FpSubspace::span(p, a.cols(), null_vectors);
}

FpSubspace image(const FpMatrix& a) {
  const FpMatrix t = a.transpose();
  RowEchelon ech(a.prime(), a.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    ech.insert(t.row(r));
    if (ech.rank() == a.rows()) break;
  }
  return FpSubspace::span(a.prime(), a.rows(), ech.basis());
}

FpSubspace intersect(const FpSubspace& u, const FpSubspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw InvalidInput("intersect: ambient dimension mismatch");
  const Prime p = u.prime();
  const std::size_t n = u.ambient_dim();
  const std::size_t k = u.dim(), l = v.dim();
  if (k == 0 || l == 0) return FpSubspace(p, n);
  // Columns u_1..u_k, -v_1..-v_l; kernel vectors (a, b) give Σ a_i u_i ∈ U ∩ V.
  std::vector<FpMatrix::Triplet> t;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      if (u.basis()[i][r] != 0) t.push_back({r, i, u.basis()[i][r]});
    }
  }
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t r = 0; r < n; ++r) {
      if (v.basis()[j][r] != 0) t.push_back({r, k + j, -static_cast<std::int64_t>(v.basis()[j][r])});
    }
  }
  const FpSubspace ker = kernel(FpMatrix::from_triplets(p, n, k + l, std::move(t)));
  std::vector<Vector> vectors;
  for (const auto& w : ker.basis()) {
    Vector x(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (w[i] == 0) continue;
      for (std::size_t r = 0; r < n; ++r) x[r] = fp::add(x[r], fp::mul(w[i], u.basis()[i][r], p), p);
    }
    vectors.push_back(std::move(x));
  }
  return FpSubspace::span(p, n, vectors);
}

FpSubspace sum(const FpSubspace& u, const FpSubspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw InvalidInput("sum: ambient dimension mismatch");
  std::vector<Vector> all = u.basis();
  all.insert(all.end(), v.basis().begin(), v.basis().end());
  return FpSubspace::span(u.prime(), u.ambient_dim(), all);
}

std::optional<Vector> solve(const FpMatrix& a, const Vector& b) {
  check_vector(b, a.rows(), "solve");
  std::vector<Vector> columns;
  columns.reserve(a.cols());
  const FpMatrix t = a.transpose();
  for (std::size_t c = 0; c < a.cols(); ++c) columns.push_back(t.row(c));
  return SpanCoordinates(a.prime(), a.rows(), columns).coordinates(b);
}

std::vector<Vector> quotient_basis(const FpSubspace& z, const FpSubspace& b) {
  if (z.ambient_dim() != b.ambient_dim()) throw InvalidInput("quotient_basis: ambient dimension mismatch");
  if (!z.contains(b)) throw InvalidInput("quotient_basis: B is not contained in Z");
  RowEchelon ech(z.prime(), z.ambient_dim());
  for (const auto& v : b.basis()) ech.insert(v);
  std::vector<Vector> reps;
  for (const auto& v : z.basis()) {
    if (ech.insert(v)) reps.push_back(v);
  }
  return reps;
}

FpMatrix vstack(const std::vector<FpMatrix>& blocks, Prime p, std::size_t cols) {
  std::size_t rows = 0;
  std::vector<FpMatrix::Triplet> t;
  for (const auto& blk : blocks) {
    if (blk.cols() != cols) throw InvalidInput("vstack: column mismatch");
    for (std::size_t r = 0; r < blk.rows(); ++r) {
      for (const auto& e : blk.sparse_row(r)) t.push_back({rows + r, e.col, e.value});
    }
    rows += blk.rows();
  }
  return FpMatrix::from_triplets(p, rows, cols, std::move(t));
}

}  // namespace fusionlab
