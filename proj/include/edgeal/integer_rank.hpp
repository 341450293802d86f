#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace edgeal {

/// Dense row-major integer matrix. Boundary matrices of the complexes built
/// here have entries in {-1, 0, 1}.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Coefficient field for homology: characteristic 0 means the rationals,
/// otherwise a prime p.
struct Field {
  int characteristic = 0;
};

/// Throws std::invalid_argument unless p is 0 or a prime below 2^31.
void validate_field(Field f);

/// Exact rank over the rationals. Unit pivots are eliminated with unimodular
/// int64 row operations; whatever remains (or any step that would overflow)
/// is finished with fraction-free Bareiss elimination on big integers.
std::size_t rank_rational(IntMatrix m);

/// Plain fraction-free Bareiss elimination on big integers, used as an
/// independent check of rank_rational.
std::size_t rank_bareiss(const IntMatrix& m);

/// Rank over GF(p).
std::size_t rank_mod_p(const IntMatrix& m, int p);

std::size_t rank(const IntMatrix& m, Field f);

}  // namespace edgeal
