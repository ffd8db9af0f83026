#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkhom/action.hpp"
#include "linkhom/mpoly.hpp"

namespace linkhom {

/// Execution policy for the heavy kernels. Every parallel kernel has a
/// serial reference path computing bit-identical results; tests compare the
/// two and the bench target times them against each other.
enum class Exec { serial, parallel };

/// Rectangular matrix of polynomials over a common strand count.
struct PolyMatrix {
  int k = 0;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<std::string> row_labels;  // empty or one per row
  std::vector<Poly> cells;              // row-major

  Poly& at(std::size_t r, std::size_t c) { return cells[r * n_cols + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return cells[r * n_cols + c]; }

  static PolyMatrix zero(int k, std::size_t rows, std::size_t cols);
  /// Stacks translation vectors as rows (coordinates in triple-rank order).
  static PolyMatrix from_vectors(const std::vector<TranslationVector>& vecs);
};

/// Determinants of the square submatrices picked by column masks.
///
/// Each mask selects popcount(mask) == n_rows columns (bit c = column c);
/// the result entry is the determinant of that column selection, all rows
/// in order. The expansion walks rows top to bottom and memoizes on the
/// set of still-unused columns, which is shared across all requested masks
/// -- this is what makes the 20x19 cofactor sweep cheap, since its 20
/// subdeterminants overlap almost everywhere.
///
/// The serial path is a plain memoized recursion; the parallel path
/// collects reachable column sets level by level and fills each level with
/// an OpenMP loop. Both produce identical polynomials.
std::vector<Poly> column_minors(const PolyMatrix& a,
                                const std::vector<uint64_t>& masks,
                                Exec exec = Exec::serial);

/// Exact determinant by sparse Laplace expansion with memoization.
Poly det(const PolyMatrix& m, Exec exec = Exec::serial);

/// Exact determinant by fraction-free Bareiss elimination. Slower on the
/// sparse matrices this project cares about; kept as an independent route
/// and as the fallback when the expansion tables would not fit in memory.
Poly det_bareiss(const PolyMatrix& m);

struct RankOptions {
  int trials = 8;
  uint64_t prime = (uint64_t{1} << 61) - 1;
  uint64_t seed = 0;
};

/// Randomized generic rank: evaluates the matrix at uniformly random
/// variable assignments mod the prime and takes the maximum rank over the
/// trials (Gaussian elimination over the prime field). Any evaluation can
/// only lower the rank, so the result is a certified lower bound on the
/// generic rank, and it equals the generic rank except with probability
/// <= trials * degree * n / prime. Primes below 2^20 are rejected.
int generic_rank(const PolyMatrix& m, const RankOptions& opt,
                 Exec exec = Exec::serial);

}  // namespace linkhom
