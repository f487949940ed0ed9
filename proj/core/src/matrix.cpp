#include "gelfand/matrix.hpp"

#include <charconv>
#include <utility>

#include "gelfand/error.hpp"

namespace gelfand {
namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!same_field(a.field(), b.field())) {
    throw DomainError("matrix operands live over different fields");
  }
}

std::string shape(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

// In-place Gauss-Jordan to reduced row echelon form. Pivot = first nonzero
// entry scanning down the current column. Returns the rank; accumulates the
// determinant of the square part when det_out is non-null.
int reduce(Matrix& m, Scalar* det_out, Matrix* companion) {
  const Field& f = *m.field();
  Scalar det_acc = f.one();
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, col).idx != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      det_acc = f.zero();
      continue;
    }
    if (pivot != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
      if (companion) {
        for (int c = 0; c < companion->cols(); ++c) std::swap((*companion)(pivot, c), (*companion)(row, c));
      }
      det_acc = f.neg(det_acc);
    }
    const Scalar p = m(row, col);
    det_acc = f.mul(det_acc, p);
    const Scalar pinv = f.inv(p);
    for (int c = 0; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), pinv);
    if (companion) {
      for (int c = 0; c < companion->cols(); ++c) (*companion)(row, c) = f.mul((*companion)(row, c), pinv);
    }
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).idx == 0) continue;
      const Scalar factor = f.neg(m(r, col));
      for (int c = 0; c < m.cols(); ++c) m(r, c) = f.add(m(r, c), f.mul(factor, m(row, c)));
      if (companion) {
        for (int c = 0; c < companion->cols(); ++c) {
          (*companion)(r, c) = f.add((*companion)(r, c), f.mul(factor, (*companion)(row, c)));
        }
      }
    }
    ++row;
  }
  if (row < m.rows()) det_acc = f.zero();
  if (det_out) *det_out = det_acc;
  return row;
}

}  // namespace

Matrix::Matrix(FieldRef field, int rows, int cols)
    : Matrix(std::move(field), rows, cols, std::vector<Scalar>(static_cast<std::size_t>(rows) * cols)) {}

Matrix::Matrix(FieldRef field, int rows, int cols, std::vector<Scalar> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (!field_) throw DomainError("matrix needs a field");
  if (rows < 1 || cols < 1) throw DimensionMismatch("matrix dimensions must be positive");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw DimensionMismatch("entry count does not match " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  }
  for (Scalar s : entries_) field_->check(s);
}

Matrix Matrix::identity(FieldRef field, int n) {
  Matrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar{1};
  return m;
}

Matrix Matrix::column(FieldRef field, std::span<const Scalar> coords) {
  return Matrix(std::move(field), static_cast<int>(coords.size()), 1,
                std::vector<Scalar>(coords.begin(), coords.end()));
}

bool Matrix::is_zero() const {
  for (Scalar s : entries_) {
    if (s.idx != 0) return false;
  }
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && same_field(a.field_, b.field_) &&
         a.entries_ == b.entries_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + shape(a) + " by " + shape(b));
  }
  const Field& f = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      Scalar acc = f.zero();
      for (int k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("cannot add " + shape(a) + " and " + shape(b));
  }
  Matrix out = a;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a.field()->add(a(i, j), b(i, j));
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("cannot subtract " + shape(b) + " from " + shape(a));
  }
  Matrix out = a;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a.field()->sub(a(i, j), b(i, j));
  }
  return out;
}

Matrix scale(Scalar s, const Matrix& a) {
  a.field()->check(s);
  Matrix out = a;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a.field()->mul(s, a(i, j));
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

Scalar det(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("determinant of non-square " + shape(a));
  Matrix work = a;
  Scalar d;
  reduce(work, &d, nullptr);
  return d;
}

int rank(const Matrix& a) {
  Matrix work = a;
  return reduce(work, nullptr, nullptr);
}

Matrix inverse(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("inverse of non-square " + shape(a));
  Matrix work = a;
  Matrix inv = Matrix::identity(a.field(), a.rows());
  if (reduce(work, nullptr, &inv) < a.rows()) throw SingularMatrix("matrix is singular");
  return inv;
}

bool is_symmetric(const Matrix& a) {
  if (!a.square()) return false;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = i + 1; j < a.cols(); ++j) {
      if (a(i, j) != a(j, i)) return false;
    }
  }
  return true;
}

Scalar dot(const Matrix& x, const Matrix& y) {
  require_same_field(x, y);
  const auto xs = x.entries();
  const auto ys = y.entries();
  if ((x.rows() != 1 && x.cols() != 1) || (y.rows() != 1 && y.cols() != 1) || xs.size() != ys.size()) {
    throw DimensionMismatch("dot product needs two vectors of equal length");
  }
  const Field& f = *x.field();
  Scalar acc = f.zero();
  for (std::size_t i = 0; i < xs.size(); ++i) acc = f.add(acc, f.mul(xs[i], ys[i]));
  return acc;
}

std::vector<std::uint8_t> canonical_bytes(const Matrix& a) {
  std::vector<std::uint8_t> out;
  out.reserve(8 + a.entries().size() * 4);
  auto put32 = [&out](std::uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
  };
  put32(static_cast<std::uint32_t>(a.rows()));
  put32(static_cast<std::uint32_t>(a.cols()));
  for (Scalar s : a.entries()) put32(s.idx);
  return out;
}

std::string to_literal(const Matrix& a) {
  std::string out;
  for (int i = 0; i < a.rows(); ++i) {
    if (i > 0) out += ';';
    for (int j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(a(i, j).idx);
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Scalar parse_scalar(std::string_view token, const Field& f) {
  token = strip(token);
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw DomainError("bad scalar '" + std::string(token) + "' in matrix literal");
  }
  Scalar s{v};
  f.check(s);
  return s;
}

}  // namespace

Matrix parse_matrix(std::string_view literal, FieldRef field) {
  const auto rows = split(literal, ';');
  std::vector<Scalar> entries;
  int cols = -1;
  for (std::string_view row : rows) {
    const auto cells = split(row, ',');
    if (cols < 0) {
      cols = static_cast<int>(cells.size());
    } else if (cols != static_cast<int>(cells.size())) {
      throw DomainError("ragged matrix literal '" + std::string(literal) + "'");
    }
    for (std::string_view cell : cells) entries.push_back(parse_scalar(cell, *field));
  }
  return Matrix(std::move(field), static_cast<int>(rows.size()), cols, std::move(entries));
}

Matrix parse_vector(std::string_view literal, FieldRef field) {
  std::vector<Scalar> coords;
  for (std::string_view cell : split(literal, ',')) coords.push_back(parse_scalar(cell, *field));
  return Matrix::column(std::move(field), coords);
}

}  // namespace gelfand
