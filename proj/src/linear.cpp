#include "wg/linear.hpp"

#include <memory>

#include "wg/config.hpp"
#include "wg/error.hpp"

namespace wg {

bool is_prime(int q) {
  if (q < 2)
    return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0)
      return false;
  return true;
}

int mod_inverse(int x, int q) {
  x %= q;
  for (int y = 1; y < q; ++y)
    if (x * y % q == 1)
      return y;
  throw ValidationError("no inverse of " + std::to_string(x) + " modulo " + std::to_string(q));
}

Matrix identity_matrix(int n) {
  Matrix m{n, std::vector<int>(static_cast<std::size_t>(n) * n, 0)};
  for (int i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

Matrix multiply(const Matrix &x, const Matrix &y, int q) {
  Matrix out{x.n, std::vector<int>(x.a.size(), 0)};
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const int xik = x.at(i, k);
      if (xik == 0)
        continue;
      for (int j = 0; j < x.n; ++j)
        out.at(i, j) = (out.at(i, j) + xik * y.at(k, j)) % q;
    }
  return out;
}

std::vector<int> apply(const Matrix &m, const std::vector<int> &v, int q) {
  std::vector<int> out(m.n, 0);
  for (int i = 0; i < m.n; ++i) {
    int s = 0;
    for (int j = 0; j < m.n; ++j)
      s += m.at(i, j) * v[j];
    out[i] = s % q;
  }
  return out;
}

int submatrix_rank(const Matrix &m, int r0, int rows, int c0, int cols, int q) {
  std::vector<std::vector<int>> a(rows, std::vector<int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      a[i][j] = m.at(r0 + i, c0 + j);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0)
      continue;
    std::swap(a[r], a[pivot]);
    const int inv = mod_inverse(a[r][c], q);
    for (int j = c; j < cols; ++j)
      a[r][j] = a[r][j] * inv % q;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      const int f = a[i][c];
      for (int j = c; j < cols; ++j)
        a[i][j] = ((a[i][j] - f * a[r][j]) % q + q) % q;
    }
    ++r;
  }
  return r;
}

int rank(const Matrix &m, int q) { return submatrix_rank(m, 0, m.n, 0, m.n, q); }

std::string matrix_label(const Matrix &m) {
  std::string out;
  for (int i = 0; i < m.n; ++i) {
    if (i)
      out += '.';
    for (int j = 0; j < m.n; ++j)
      out += static_cast<char>('0' + m.at(i, j));
  }
  return out;
}

std::uint64_t gl_order(int n, int q) {
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i)
    qn *= static_cast<std::uint64_t>(q);
  std::uint64_t order = 1, qk = 1;
  for (int k = 0; k < n; ++k) {
    order *= qn - qk;
    qk *= static_cast<std::uint64_t>(q);
  }
  return order;
}

namespace {

std::uint64_t encode(const Matrix &m, int q) {
  std::uint64_t code = 0;
  for (int x : m.a)
    code = code * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(x);
  return code;
}

} // namespace

GroupElement GeneralLinearGroup::index_of(const Matrix &m) const {
  const auto code = encode(m, q);
  if (code >= code_index.size() || code_index[code] < 0)
    throw ValidationError("matrix " + matrix_label(m) + " is not in GL(" + std::to_string(n) + "," +
                          std::to_string(q) + ")");
  return static_cast<GroupElement>(code_index[code]);
}

GeneralLinearGroup general_linear_group(int n, int q) {
  if (n < 1)
    throw ValidationError("matrix size must be positive");
  if (!is_prime(q))
    throw ValidationError("finite-field arithmetic is implemented for prime q only, got " + std::to_string(q));
  const std::uint64_t order = gl_order(n, q);
  if (order > element_budget())
    throw CapacityError("GL(" + std::to_string(n) + "," + std::to_string(q) + ") has order " +
                        std::to_string(order) + ", above the element budget " + std::to_string(element_budget()));
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i)
    total *= static_cast<std::uint64_t>(q);
  if (total > 16 * element_budget())
    throw CapacityError("matrix space too large to enumerate");

  auto gl = std::make_shared<GeneralLinearGroup>();
  gl->n = n;
  gl->q = q;
  gl->code_index.assign(total, -1);
  Matrix m{n, std::vector<int>(static_cast<std::size_t>(n) * n, 0)};
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int k = n * n - 1; k >= 0; --k) {
      m.a[k] = static_cast<int>(c % static_cast<std::uint64_t>(q));
      c /= static_cast<std::uint64_t>(q);
    }
    if (rank(m, q) == n) {
      gl->code_index[code] = static_cast<std::int32_t>(gl->matrices.size());
      gl->matrices.push_back(m);
    }
  }
  std::vector<std::string> labels;
  for (const auto &mat : gl->matrices)
    labels.push_back(matrix_label(mat));

  const std::size_t size = gl->matrices.size();
  auto mul = [gl](GroupElement a, GroupElement b) {
    return gl->index_of(multiply(gl->matrices[a], gl->matrices[b], gl->q));
  };
  if (size * size <= (std::size_t{1} << 22)) {
    std::vector<GroupElement> table(size * size);
    for (GroupElement a = 0; a < size; ++a)
      for (GroupElement b = 0; b < size; ++b)
        table[static_cast<std::size_t>(a) * size + b] = mul(a, b);
    gl->group = FiniteGroup::from_table(std::move(labels), std::move(table));
  } else {
    // Capture a snapshot so the callback does not depend on the returned object.
    auto snapshot = std::make_shared<const GeneralLinearGroup>(*gl);
    gl->group = FiniteGroup::from_function(std::move(labels), [snapshot](GroupElement a, GroupElement b) {
      return snapshot->index_of(multiply(snapshot->matrices[a], snapshot->matrices[b], snapshot->q));
    });
  }
  return *gl;
}

} // namespace wg
