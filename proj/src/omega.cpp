#include "linkhom/omega.hpp"

#include <stdexcept>

namespace linkhom {

std::vector<std::pair<int, int>> omega_row_selection() {
  return {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 1}, {2, 3}, {2, 4}, {2, 5}, {3, 1},
          {3, 2}, {3, 4}, {3, 5}, {4, 1}, {4, 2}, {4, 3}, {4, 5}, {5, 1}, {5, 2}};
}

PolyMatrix build_omega_matrix() {
  std::vector<TranslationVector> rows;
  rows.reserve(19);
  for (auto [i, j] : omega_row_selection()) rows.push_back(partial_conj_vector(6, i, j));
  rows.push_back(reversal_vector(6));
  return PolyMatrix::from_vectors(rows);
}

OmegaCertificate cofactor_perp(const PolyMatrix& m, Exec exec, DetAlgorithm alg) {
  if (m.n_cols != m.n_rows + 1)
    throw std::invalid_argument("cofactor_perp: need n_cols == n_rows + 1");
  if (m.n_cols > 63) throw std::invalid_argument("cofactor_perp: too many columns");

  OmegaCertificate cert;
  cert.k = m.k;
  cert.row_labels = m.row_labels;
  cert.omega.reserve(m.n_cols);

  if (alg == DetAlgorithm::laplace_memo) {
    cert.algorithm = "laplace-memo";
    const uint64_t full = (uint64_t{1} << m.n_cols) - 1;
    std::vector<uint64_t> masks;
    masks.reserve(m.n_cols);
    for (std::size_t c = 0; c < m.n_cols; ++c) masks.push_back(full & ~(uint64_t{1} << c));
    std::vector<Poly> minors = column_minors(m, masks, exec);
    for (std::size_t c = 0; c < m.n_cols; ++c)
      cert.omega.push_back(c % 2 == 0 ? minors[c] : -minors[c]);
  } else {
    cert.algorithm = "bareiss";
    for (std::size_t c = 0; c < m.n_cols; ++c) {
      PolyMatrix sub = PolyMatrix::zero(m.k, m.n_rows, m.n_rows);
      for (std::size_t r = 0; r < m.n_rows; ++r) {
        std::size_t out = 0;
        for (std::size_t cc = 0; cc < m.n_cols; ++cc)
          if (cc != c) sub.at(r, out++) = m.at(r, cc);
      }
      Poly d = det_bareiss(sub);
      cert.omega.push_back(c % 2 == 0 ? d : -d);
    }
  }

  bool all_zero = true;
  for (const Poly& p : cert.omega) all_zero = all_zero && p.is_zero();
  if (all_zero)
    throw std::runtime_error("cofactor_perp: perpendicular vector vanishes (rank-deficient matrix)");

  for (std::size_t r = 0; r < m.n_rows; ++r) {
    Poly dot(m.k);
    for (std::size_t c = 0; c < m.n_cols; ++c) dot += cert.omega[c] * m.at(r, c);
    if (!dot.is_zero()) {
      std::string label = r < m.row_labels.size() ? m.row_labels[r] : std::to_string(r);
      throw std::runtime_error("cofactor_perp: orthogonality failed for row " + label);
    }
  }

  cert.stats.reserve(cert.omega.size());
  for (const Poly& p : cert.omega) {
    PolyMeasure meas = p.measure();
    cert.stats.push_back({meas.term_count, meas.total_degree, meas.content});
  }
  return cert;
}

bool PerpReport::all_zero() const {
  for (const PerpCheck& c : checks)
    if (!c.zero) return false;
  return true;
}

PerpReport verify_perp(const OmegaCertificate& cert,
                       const std::vector<TranslationVector>& vectors) {
  PerpReport report;
  for (const TranslationVector& v : vectors) {
    if (v.coords.size() != cert.omega.size())
      throw std::invalid_argument("verify_perp: vector length mismatch for " + v.label);
    Poly dot(cert.k);
    for (std::size_t t = 0; t < v.coords.size(); ++t) dot += cert.omega[t] * v.coords[t];
    report.checks.push_back({v.label, dot.is_zero()});
  }
  return report;
}

}  // namespace linkhom
