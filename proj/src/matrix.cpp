#include "qcflag/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcflag {

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Poly(1L);
  return m;
}

PolyMatrix PolyMatrix::parse(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return {};
  PolyMatrix m(int(rows.size()), int(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (int(rows[i].size()) != m.cols()) throw ParseError("ragged matrix row " + std::to_string(i));
    for (int j = 0; j < m.cols(); ++j) m(i, j) = Poly::parse(rows[i][j]);
  }
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::size_t PolyMatrix::nonzero_count() const {
  return std::size_t(std::count_if(data_.begin(), data_.end(), [](const Poly& p) { return !p.is_zero(); }));
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r(a.rows_, b.cols_);
  // sparse row lists of b
  std::vector<std::vector<int>> nz(b.rows_);
  for (int k = 0; k < b.rows_; ++k)
    for (int j = 0; j < b.cols_; ++j)
      if (!b(k, j).is_zero()) nz[k].push_back(j);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Poly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j : nz[k]) r(i, j) += aik * b(k, j);
    }
  return r;
}

PolyMatrix operator*(const Poly& c, const PolyMatrix& a) {
  PolyMatrix r(a.rows_, a.cols_);
  if (c.is_zero()) return r;
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    if (!a.data_[k].is_zero()) r.data_[k] = c * a.data_[k];
  return r;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r = *this;
  for (auto& p : r.data_) p = -p;
  return r;
}

PolyMatrix PolyMatrix::commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

std::vector<Poly> PolyMatrix::column(int j) const {
  std::vector<Poly> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

PolyMatrix PolyMatrix::transform(const std::function<Poly(const Poly&)>& f) const {
  PolyMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!data_[k].is_zero()) r.data_[k] = f(data_[k]);
  return r;
}

PolyMatrix PolyMatrix::unipotent_inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  PolyMatrix neg_n = identity(rows_) - *this;  // -N
  PolyMatrix sum = identity(rows_);
  PolyMatrix power = identity(rows_);
  for (int k = 1; k <= rows_; ++k) {
    power = power * neg_n;
    if (power.is_zero()) return sum;
    sum += power;
  }
  throw std::domain_error("matrix is not unipotent");
}

PolyMatrix PolyMatrix::rational_inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = rows_;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(*this)(i, j).is_constant()) throw std::domain_error("rational_inverse needs constant entries");
      a[i][j] = (*this)(i, j).constant_term();
    }
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  PolyMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = Poly(a[i][n + j]);
  return r;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).to_string();
  return out;
}

nlohmann::json PolyMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < cols_; ++j) row.push_back((*this)(i, j).to_json());
    rows.push_back(std::move(row));
  }
  return rows;
}

PolyMatrix PolyMatrix::from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) return {};
  PolyMatrix m(int(j.size()), int(j.at(0).size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (int(j.at(r).size()) != m.cols()) throw ParseError("ragged matrix in JSON");
    for (int c = 0; c < m.cols(); ++c) m(r, c) = Poly::from_json(j.at(r).at(c));
  }
  return m;
}

std::string PolyMatrix::to_latex() const {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " & ";
      os << (*this)(i, j).to_latex();
    }
    os << (i + 1 < rows_ ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}";
  return os.str();
}

std::string PolyMatrix::to_latex_slabs(int max_cols) const {
  if (max_cols <= 0 || cols_ <= max_cols) return to_latex();
  std::ostringstream os;
  for (int start = 0; start < cols_; start += max_cols) {
    const int stop = std::min(cols_, start + max_cols);
    os << "% columns " << start << "-" << stop - 1 << "\n\\begin{pmatrix}\n";
    for (int i = 0; i < rows_; ++i) {
      for (int j = start; j < stop; ++j) {
        if (j > start) os << " & ";
        os << (*this)(i, j).to_latex();
      }
      os << (i + 1 < rows_ ? " \\\\\n" : "\n");
    }
    os << "\\end{pmatrix}";
    if (stop < cols_) os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

BlockPartition::BlockPartition(std::vector<int> block_of) : block_of_(std::move(block_of)) {
  for (std::size_t i = 0; i < block_of_.size(); ++i) {
    int b = block_of_[i];
    if (b < 0) throw std::invalid_argument("negative block index");
    if (i && b < block_of_[i - 1]) throw std::invalid_argument("block index must be non-decreasing");
    if (int(sizes_.size()) <= b) sizes_.resize(b + 1, 0);
    ++sizes_[b];
  }
}

PolyMatrix BlockPartition::diagonal(const PolyMatrix& a, int k) const {
  PolyMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (diagonal_of(i, j) == k && !a(i, j).is_zero()) r(i, j) = a(i, j);
  return r;
}

std::map<int, PolyMatrix> BlockPartition::slices(const PolyMatrix& a) const {
  std::map<int, PolyMatrix> out;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      int k = diagonal_of(i, j);
      auto it = out.find(k);
      if (it == out.end()) it = out.emplace(k, PolyMatrix(a.rows(), a.cols())).first;
      it->second(i, j) = a(i, j);
    }
  return out;
}

bool BlockPartition::is_triangular(const PolyMatrix& a, int l) const {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (diagonal_of(i, j) < l && !a(i, j).is_zero()) return false;
  return true;
}

bool BlockMatForm::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const PolyMatrix& m) { return m.is_zero(); });
}

nlohmann::json BlockMatForm::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : components) out.push_back(c.to_json());
  return out;
}

BlockMatForm BlockMatForm::from_json(const nlohmann::json& j) {
  BlockMatForm f;
  for (const auto& c : j) f.components.push_back(PolyMatrix::from_json(c));
  return f;
}

}  // namespace qcflag
