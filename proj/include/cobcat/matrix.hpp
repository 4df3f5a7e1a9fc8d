#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "cobcat/error.hpp"

namespace cobcat {

// Multi-index helpers. A word of dimensioned letters indexes a flat range
// row-major: the first letter is the most significant digit.

inline long long total_dim(const std::vector<int>& dims) {
  long long t = 1;
  for (int d : dims) t *= d;
  return t;
}

inline long long flat_index(const std::vector<int>& dims,
                            const std::vector<int>& digits) {
  long long f = 0;
  for (size_t i = 0; i < dims.size(); ++i)
    f = f * dims[i] + digits[i];
  return f;
}

/// Advances digits odometer-style; returns false after wrapping to zero.
inline bool next_digits(const std::vector<int>& dims,
                        std::vector<int>& digits) {
  for (size_t i = dims.size(); i-- > 0;) {
    if (++digits[i] < dims[i]) return true;
    digits[i] = 0;
  }
  return false;
}

/// Sparse matrix over a semiring: only nonzero entries are stored, keyed
/// (row, col) so iteration is row-major and deterministic. Rows index the
/// codomain. Structural wirings produce permutation-sparse matrices whose
/// products stay far smaller than their nominal shapes.
template <typename S>
struct Matrix {
  using V = typename S::value_type;
  using Key = std::pair<long long, long long>;

  long long rows = 0, cols = 0;
  std::map<Key, V> nz;

  Matrix() = default;
  Matrix(long long r, long long c) : rows(r), cols(c) {}

  /// Value at (r, c); absent entries read as zero.
  V at(long long r, long long c) const {
    auto it = nz.find({r, c});
    return it == nz.end() ? S::zero() : it->second;
  }

  void set(long long r, long long c, V v) {
    if (S::is_zero(v))
      nz.erase({r, c});
    else
      nz[{r, c}] = std::move(v);
  }

  void add_to(long long r, long long c, const V& v) {
    if (S::is_zero(v)) return;
    auto [it, fresh] = nz.try_emplace(Key{r, c}, v);
    if (!fresh) {
      it->second = S::add(it->second, v);
      if (S::is_zero(it->second)) nz.erase(it);
    }
  }
};

template <typename S>
Matrix<S> from_dense(long long rows, long long cols,
                     const std::vector<typename S::value_type>& data) {
  require(static_cast<long long>(data.size()) == rows * cols,
          Errc::type_mismatch, "dense entry count does not match the shape");
  Matrix<S> m(rows, cols);
  for (long long r = 0; r < rows; ++r)
    for (long long c = 0; c < cols; ++c)
      m.set(r, c, data[static_cast<size_t>(r * cols + c)]);
  return m;
}

template <typename S>
std::vector<typename S::value_type> to_dense(const Matrix<S>& m) {
  std::vector<typename S::value_type> out(
      static_cast<size_t>(m.rows * m.cols), S::zero());
  for (const auto& [k, v] : m.nz)
    out[static_cast<size_t>(k.first * m.cols + k.second)] = v;
  return out;
}

template <typename S>
Matrix<S> identity_matrix(long long n) {
  Matrix<S> m(n, n);
  for (long long i = 0; i < n; ++i) m.set(i, i, S::one());
  return m;
}

/// Standard product a·b over the stored entries only.
template <typename S>
Matrix<S> matmul(const Matrix<S>& a, const Matrix<S>& b) {
  require(a.cols == b.rows, Errc::type_mismatch,
          "matrix product shape mismatch");
  using V = typename S::value_type;
  std::map<long long, std::vector<std::pair<long long, const V*>>> brows;
  for (const auto& [k, v] : b.nz)
    brows[k.first].push_back({k.second, &v});
  Matrix<S> out(a.rows, b.cols);
  for (const auto& [k, av] : a.nz) {
    auto it = brows.find(k.second);
    if (it == brows.end()) continue;
    for (const auto& [j, bv] : it->second)
      out.add_to(k.first, j, S::mul(av, *bv));
  }
  return out;
}

/// Kronecker product, first factor most significant.
template <typename S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows * b.rows, a.cols * b.cols);
  for (const auto& [ka, av] : a.nz)
    for (const auto& [kb, bv] : b.nz)
      out.set(ka.first * b.rows + kb.first, ka.second * b.cols + kb.second,
              S::mul(av, bv));
  return out;
}

/// Feedback over the leading factor: m has shape (dU·dY)×(dU·dX); the
/// result sums the diagonal U blocks into a dY×dX matrix.
template <typename S>
Matrix<S> partial_trace_leading(const Matrix<S>& m, long long dU,
                                long long dX, long long dY) {
  require(m.rows == dU * dY && m.cols == dU * dX, Errc::type_mismatch,
          "partial trace shape mismatch");
  Matrix<S> out(dY, dX);
  for (const auto& [k, v] : m.nz) {
    long long ur = k.first / dY, y = k.first % dY;
    long long uc = k.second / dX, x = k.second % dX;
    if (ur == uc) out.add_to(y, x, v);
  }
  return out;
}

template <typename S>
bool matrix_equal(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  auto ia = a.nz.begin(), ib = b.nz.begin();
  // Merge walk: a key present on one side only must hold a value equal to
  // zero up to the semiring's tolerance.
  while (ia != a.nz.end() || ib != b.nz.end()) {
    if (ib == b.nz.end() || (ia != a.nz.end() && ia->first < ib->first)) {
      if (!S::eq(ia->second, S::zero())) return false;
      ++ia;
    } else if (ia == a.nz.end() || ib->first < ia->first) {
      if (!S::eq(ib->second, S::zero())) return false;
      ++ib;
    } else {
      if (!S::eq(ia->second, ib->second)) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

}  // namespace cobcat
