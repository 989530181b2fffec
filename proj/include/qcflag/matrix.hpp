#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qcflag/poly.hpp"

namespace qcflag {

/// Dense matrix of polynomials. Columns index source basis elements and rows
/// index targets, so column j of a multiplication matrix is the image of
/// basis element j.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  static PolyMatrix identity(int n);
  static PolyMatrix parse(const std::vector<std::vector<std::string>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Poly& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }
  Poly& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }

  bool is_zero() const;
  std::size_t nonzero_count() const;

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& c, const PolyMatrix& a);
  PolyMatrix operator-() const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

  /// a*b - b*a
  static PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);

  std::vector<Poly> column(int j) const;
  PolyMatrix transform(const std::function<Poly(const Poly&)>& f) const;
  PolyMatrix t_derivative(int i) const { return transform([i](const Poly& p) { return p.t_derivative(i); }); }
  PolyMatrix at_q_zero() const { return transform([](const Poly& p) { return p.at_q_zero(); }); }

  /// Inverse of I + N with N nilpotent, as the finite sum of (-N)^k.
  PolyMatrix unipotent_inverse() const;
  /// Inverse of a matrix with constant entries, by Gauss-Jordan elimination over Q.
  PolyMatrix rational_inverse() const;

  std::vector<std::vector<std::string>> to_strings() const;
  nlohmann::json to_json() const;
  static PolyMatrix from_json(const nlohmann::json& j);
  std::string to_latex() const;
  /// Wide matrices split into column slabs of at most max_cols, one pmatrix each.
  std::string to_latex_slabs(int max_cols = 15) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Poly> data_;
};

/// Assignment of basis indices to blocks: block_of[i] = alpha(i), the
/// cohomological degree / 2 of basis element i.
class BlockPartition {
 public:
  BlockPartition() = default;
  explicit BlockPartition(std::vector<int> block_of);

  int dim() const { return int(block_of_.size()); }
  int block_count() const { return int(sizes_.size()); }
  int top_block() const { return block_count() - 1; }
  int block_of(int i) const { return block_of_[i]; }
  int block_size(int alpha) const { return sizes_[alpha]; }
  const std::vector<int>& sizes() const { return sizes_; }

  /// Block diagonal index beta - alpha of entry (i, j).
  int diagonal_of(int i, int j) const { return block_of_[j] - block_of_[i]; }

  /// The k-diagonal part of a (block) matrix.
  PolyMatrix diagonal(const PolyMatrix& a, int k) const;
  /// Nonzero diagonal parts keyed by k.
  std::map<int, PolyMatrix> slices(const PolyMatrix& a) const;
  /// True when every k-diagonal with k < l vanishes.
  bool is_triangular(const PolyMatrix& a, int l) const;

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  std::vector<int> block_of_;
  std::vector<int> sizes_;
};

/// An r-tuple of matrices: the dt_1..dt_r components of a matrix 1-form.
struct BlockMatForm {
  std::vector<PolyMatrix> components;

  int rank() const { return int(components.size()); }
  const PolyMatrix& operator[](int i) const { return components[i]; }  // 0-based component
  PolyMatrix& operator[](int i) { return components[i]; }
  bool is_zero() const;
  friend bool operator==(const BlockMatForm&, const BlockMatForm&) = default;

  nlohmann::json to_json() const;
  static BlockMatForm from_json(const nlohmann::json& j);
};

}  // namespace qcflag
