#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linkhom/polymatrix.hpp"

namespace linkhom {

struct CoordStats {
  std::size_t term_count = 0;
  int degree = 0;
  Int content = 0;
};

/// The perpendicular polynomial vector for k=6 with its provenance: the row
/// labels of the matrix it was built from, the 20 cofactor polynomials, and
/// per-coordinate statistics. The build is deterministic (no randomness
/// anywhere), so re-running it reproduces the certificate bit for bit.
struct OmegaCertificate {
  int k = 0;
  std::string algorithm;                // "laplace-memo" or "bareiss"
  std::vector<std::string> row_labels;  // 19 rows, in matrix order
  std::vector<Poly> omega;              // 20 coordinates
  std::vector<CoordStats> stats;
};

/// The fixed 18 partial conjugations whose translation vectors, together
/// with the reversal row, span the sublattice the invariant must avoid.
/// Order matters: it pins the sign of the cofactor vector.
std::vector<std::pair<int, int>> omega_row_selection();

/// The pinned 19x20 matrix for k=6: the 18 selected partial-conjugation
/// vectors in order, then the reversal vector. Columns in triple-rank order.
PolyMatrix build_omega_matrix();

enum class DetAlgorithm { laplace_memo, bareiss };

/// Cofactor construction of the perpendicular vector of an n x (n+1)
/// matrix: omega[i] = (-1)^i * det(M with column i deleted), 0-based.
/// Orthogonality of omega against every row of M is verified exactly before
/// returning; a rank-deficient input (omega identically zero) is an error.
OmegaCertificate cofactor_perp(const PolyMatrix& m, Exec exec = Exec::serial,
                               DetAlgorithm alg = DetAlgorithm::laplace_memo);

struct PerpCheck {
  std::string label;
  bool zero = false;
};

struct PerpReport {
  std::vector<PerpCheck> checks;
  bool all_zero() const;
};

/// For each vector v, computes sum_t omega[t]*v[t] as an exact polynomial
/// and reports whether it vanishes identically.
PerpReport verify_perp(const OmegaCertificate& cert,
                       const std::vector<TranslationVector>& vectors);

}  // namespace linkhom
