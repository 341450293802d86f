#include "edgeal/integer_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace edgeal {

using BigInt = boost::multiprecision::cpp_int;

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t bareiss(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

void validate_field(Field f) {
  if (f.characteristic == 0) return;
  if (f.characteristic < 0 || !is_prime(f.characteristic))
    throw std::invalid_argument("field characteristic must be 0 or a prime, got " +
                                std::to_string(f.characteristic));
}

std::size_t rank_bareiss(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return bareiss(std::move(a));
}

std::size_t rank_rational(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<bool> row_done(rows, false);
  std::vector<bool> col_done(cols, false);
  std::vector<std::int64_t> scratch(cols);
  std::size_t pivots = 0;
  bool overflowed = false;
  while (!overflowed) {
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t i = 0; i < rows && pr == rows; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!col_done[j] && (m(i, j) == 1 || m(i, j) == -1)) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == rows) break;
    const std::int64_t sign = m(pr, pc);
    for (std::size_t i = 0; i < rows && !overflowed; ++i) {
      if (i == pr || row_done[i] || m(i, pc) == 0) continue;
      const std::int64_t factor = m(i, pc) * sign;  // row_i -= factor * row_p
      for (std::size_t j = 0; j < cols; ++j) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(factor, m(pr, j), &prod) ||
            __builtin_sub_overflow(m(i, j), prod, &scratch[j])) {
          overflowed = true;
          break;
        }
      }
      if (!overflowed)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = scratch[j];
    }
    if (overflowed) break;
    row_done[pr] = true;
    col_done[pc] = true;
    ++pivots;
  }
  // Pivot rows are unit-triangular on the pivot columns and the remaining
  // rows vanish there, so rank = pivots + rank of the leftover block.
  std::vector<std::vector<BigInt>> rest;
  for (std::size_t i = 0; i < rows; ++i) {
    if (row_done[i]) continue;
    std::vector<BigInt> row;
    bool nonzero = false;
    for (std::size_t j = 0; j < cols; ++j) {
      if (col_done[j]) continue;
      row.emplace_back(m(i, j));
      nonzero = nonzero || m(i, j) != 0;
    }
    if (nonzero) rest.push_back(std::move(row));
  }
  return pivots + bareiss(std::move(rest));
}

std::size_t rank_mod_p(const IntMatrix& m, int p) {
  validate_field({p});
  if (p == 0) throw std::invalid_argument("rank_mod_p needs a prime");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::int64_t mod = p;
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((m(i, j) % mod) + mod) % mod;
  auto inverse = [&](std::int64_t x) {
    std::int64_t result = 1;
    std::int64_t base = x;
    for (std::int64_t e = mod - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % mod;
      base = base * base % mod;
    }
    return result;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const std::int64_t inv = inverse(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::int64_t f = a[i][c] * inv % mod;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % mod + mod) % mod;
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& m, Field f) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return f.characteristic == 0 ? rank_rational(m) : rank_mod_p(m, f.characteristic);
}

}  // namespace edgeal
