#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gelfand/error.hpp"
#include "gelfand/matrix.hpp"

namespace gelfand {
namespace {

// Every n x n matrix over f, row-major digit order.
std::vector<Matrix> all_matrices(const FieldRef& f, int n) {
  std::vector<Matrix> out;
  const int q = f->order();
  long long total = 1;
  for (int i = 0; i < n * n; ++i) total *= q;
  for (long long code = 0; code < total; ++code) {
    std::vector<Scalar> e(n * n);
    long long rest = code;
    for (int i = n * n - 1; i >= 0; --i) {
      e[i] = Scalar{static_cast<std::uint32_t>(rest % q)};
      rest /= q;
    }
    out.emplace_back(f, n, n, std::move(e));
  }
  return out;
}

TEST(Matrix, MultiplicationExamples) {
  const auto f2 = build_field(2, 1);
  const auto f3 = build_field(3, 1);
  const auto f5 = build_field(5, 1);
  for (const Matrix& m : all_matrices(f3, 2)) EXPECT_EQ(Matrix::identity(f3, 2) * m, m);
  const Matrix u = parse_matrix("1,1;0,1", f2);
  EXPECT_EQ(mat_mul(u, u), Matrix::identity(f2, 2));
  EXPECT_EQ(parse_matrix("2", f5) * parse_matrix("3", f5), parse_matrix("1", f5));
}

TEST(Matrix, RankDetInverseExamples) {
  const auto f2 = build_field(2, 1);
  const auto f3 = build_field(3, 1);
  EXPECT_EQ(mat_rank(parse_matrix("1,0,0,0;0,1,0,0;0,0,0,0;0,0,0,0", f3)), 2);
  EXPECT_EQ(mat_det(parse_matrix("1,1;0,1", f2)), Scalar{1});

  const Matrix a = parse_matrix("0,1;1,1", f2);
  const Matrix expected = parse_matrix("1,1;1,0", f2);
  // Oracle: the product with the claimed inverse is the identity.
  ASSERT_EQ(a * expected, Matrix::identity(f2, 2));
  EXPECT_EQ(mat_inverse(a), expected);
}

TEST(Matrix, Errors) {
  const auto f3 = build_field(3, 1);
  const auto f5 = build_field(5, 1);
  EXPECT_THROW(mat_inverse(parse_matrix("1,2;2,1", f3)), SingularMatrix);
  EXPECT_THROW(parse_matrix("1,2", f3) * parse_matrix("1,2", f3), DimensionMismatch);
  EXPECT_THROW(parse_matrix("1", f3) * parse_matrix("1", f5), DomainError);
  EXPECT_THROW(det(parse_matrix("1,2", f3)), DimensionMismatch);
  EXPECT_THROW(parse_matrix("1,2;3", f3), DomainError);
  EXPECT_THROW(parse_matrix("1,3", f3), DomainError);
  EXPECT_THROW(parse_matrix("1,x", f3), DomainError);
}

TEST(Matrix, LiteralFormat) {
  const auto f5 = build_field(5, 1);
  const Matrix m = parse_matrix("1,2;0,4", f5);
  EXPECT_EQ(m.rows(), 2);
  EXPECT_EQ(m(0, 1), Scalar{2});
  EXPECT_EQ(to_literal(m), "1,2;0,4");
  EXPECT_EQ(to_literal(parse_vector("1, 2 ,3", f5)), "1;2;3");
}

TEST(Matrix, CanonicalBytesAreInjective) {
  const auto f3 = build_field(3, 1);
  std::set<std::vector<std::uint8_t>> seen;
  for (const Matrix& m : all_matrices(f3, 2)) EXPECT_TRUE(seen.insert(canonical_bytes(m)).second);
  // Shape is part of the encoding.
  EXPECT_NE(canonical_bytes(parse_matrix("1,2", f3)), canonical_bytes(parse_matrix("1;2", f3)));
}

void check_pair_laws(const Matrix& a, const Matrix& b) {
  EXPECT_EQ(inverse(a * b), inverse(b) * inverse(a));
  EXPECT_EQ(transpose(a * b), transpose(b) * transpose(a));
  const Field& f = *a.field();
  EXPECT_EQ(det(a * b), f.mul(det(a), det(b)));
}

TEST(Matrix, ProductLawsExhaustiveOverGL2F2) {
  const auto f2 = build_field(2, 1);
  std::vector<Matrix> gl;
  for (const Matrix& m : all_matrices(f2, 2)) {
    if (det(m).idx != 0) gl.push_back(m);
  }
  ASSERT_EQ(gl.size(), 6u);
  for (const Matrix& a : gl) {
    for (const Matrix& b : gl) check_pair_laws(a, b);
  }
}

TEST(Matrix, ProductLawsSampledOverGL2F3) {
  const auto f3 = build_field(3, 1);
  std::vector<Matrix> gl;
  for (const Matrix& m : all_matrices(f3, 2)) {
    if (det(m).idx != 0) gl.push_back(m);
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, gl.size() - 1);
  for (int trial = 0; trial < 500; ++trial) check_pair_laws(gl[pick(rng)], gl[pick(rng)]);
}

TEST(Matrix, InvertibilityCriteriaAgree) {
  for (int q : {2, 3}) {
    const auto f = Field::of_order(q);
    for (const Matrix& m : all_matrices(f, q == 2 ? 3 : 2)) {
      const bool full_rank = rank(m) == m.rows();
      EXPECT_EQ(full_rank, det(m).idx != 0);
      EXPECT_EQ(rank(m), rank(transpose(m)));
      EXPECT_EQ(transpose(transpose(m)), m);
      if (full_rank) {
        EXPECT_EQ(m * inverse(m), Matrix::identity(f, m.rows()));
      } else {
        EXPECT_THROW(inverse(m), SingularMatrix);
      }
    }
  }
}

TEST(Matrix, SymmetryIsPreservedByInversion) {
  const auto f3 = build_field(3, 1);
  int checked = 0;
  for (const Matrix& m : all_matrices(f3, 2)) {
    if (!is_symmetric(m) || det(m).idx == 0) continue;
    EXPECT_TRUE(is_symmetric(inverse(m)));
    ++checked;
  }
  EXPECT_GT(checked, 0);
  for (const Matrix& m : all_matrices(f3, 2)) {
    if (!is_symmetric(m) && det(m).idx != 0) EXPECT_FALSE(is_symmetric(inverse(m)));
  }
}

}  // namespace
}  // namespace gelfand
