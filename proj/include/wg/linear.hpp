#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wg/group.hpp"

namespace wg {

/// Square matrix over F_q (q prime), row-major entries in [0, q).
struct Matrix {
  int n = 0;
  std::vector<int> a;

  int at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  int &at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  friend bool operator==(const Matrix &, const Matrix &) = default;
};

bool is_prime(int q);
int mod_inverse(int x, int q);

Matrix identity_matrix(int n);
Matrix multiply(const Matrix &x, const Matrix &y, int q);
std::vector<int> apply(const Matrix &m, const std::vector<int> &v, int q);
/// Rank of the rows [r0, r0+rows) x columns [c0, c0+cols) of m.
int submatrix_rank(const Matrix &m, int r0, int rows, int c0, int cols, int q);
int rank(const Matrix &m, int q);
std::string matrix_label(const Matrix &m);

/// GL_n(F_q), enumerated exhaustively in increasing base-q code order.
struct GeneralLinearGroup {
  int n = 0;
  int q = 0;
  std::vector<Matrix> matrices;
  FiniteGroup group;

  /// Index of an invertible matrix in `matrices`.
  GroupElement index_of(const Matrix &m) const;

  std::vector<std::int32_t> code_index; // base-q code -> index, or -1
};

/// Throws ValidationError for non-prime q and CapacityError when the group
/// order exceeds element_budget().
GeneralLinearGroup general_linear_group(int n, int q);

/// |GL_n(F_q)| = prod_{k<n} (q^n - q^k).
std::uint64_t gl_order(int n, int q);

} // namespace wg
