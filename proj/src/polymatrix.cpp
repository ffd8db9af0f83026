#include "linkhom/polymatrix.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace linkhom {

PolyMatrix PolyMatrix::zero(int k, std::size_t rows, std::size_t cols) {
  PolyMatrix m;
  m.k = k;
  m.n_rows = rows;
  m.n_cols = cols;
  m.cells.assign(rows * cols, Poly(k));
  return m;
}

PolyMatrix PolyMatrix::from_vectors(const std::vector<TranslationVector>& vecs) {
  if (vecs.empty()) throw std::invalid_argument("from_vectors: no rows");
  PolyMatrix m = zero(vecs.front().k, vecs.size(), vecs.front().coords.size());
  for (std::size_t r = 0; r < vecs.size(); ++r) {
    if (vecs[r].coords.size() != m.n_cols || vecs[r].k != m.k)
      throw std::invalid_argument("from_vectors: mismatched vector shapes");
    m.row_labels.push_back(vecs[r].label);
    for (std::size_t c = 0; c < m.n_cols; ++c) m.at(r, c) = vecs[r].coords[c];
  }
  return m;
}

namespace {

struct RowSupport {
  std::vector<int> cols;
  std::vector<const Poly*> entries;
};

std::vector<RowSupport> build_support(const PolyMatrix& a) {
  std::vector<RowSupport> sup(a.n_rows);
  for (std::size_t r = 0; r < a.n_rows; ++r)
    for (std::size_t c = 0; c < a.n_cols; ++c)
      if (!a.at(r, c).is_zero()) {
        sup[r].cols.push_back(static_cast<int>(c));
        sup[r].entries.push_back(&a.at(r, c));
      }
  return sup;
}

// det of the trailing popcount(mask) rows of `a` restricted to the columns
// in `mask`, expanding along the topmost of those rows.
class SerialMinors {
 public:
  SerialMinors(const PolyMatrix& a, const std::vector<RowSupport>& sup)
      : a_(a), sup_(sup) {}

  const Poly& minor(uint64_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    int level = std::popcount(mask);
    Poly acc(a_.k);
    if (level == 0) {
      acc = Poly::constant(a_.k, 1);
    } else {
      const RowSupport& row = sup_[a_.n_rows - static_cast<std::size_t>(level)];
      for (std::size_t e = 0; e < row.cols.size(); ++e) {
        int c = row.cols[e];
        if (!((mask >> c) & 1)) continue;
        const Poly& sub = minor(mask & ~(uint64_t{1} << c));
        if (sub.is_zero()) continue;
        Poly prod = *row.entries[e] * sub;
        int pos = std::popcount(mask & ((uint64_t{1} << c) - 1));
        acc += (pos % 2 == 0) ? prod : -prod;
      }
    }
    return memo_.emplace(mask, std::move(acc)).first->second;
  }

 private:
  const PolyMatrix& a_;
  const std::vector<RowSupport>& sup_;
  std::unordered_map<uint64_t, Poly> memo_;
};

// Level-synchronous variant: enumerate the reachable column sets per level
// from the requested masks, then fill levels bottom-up. Within a level every
// entry is independent, so the fill loop parallelizes; only the previous
// level is read, so at most two levels are live at a time.
std::vector<Poly> parallel_minors(const PolyMatrix& a,
                                  const std::vector<RowSupport>& sup,
                                  const std::vector<uint64_t>& masks) {
  const int top = static_cast<int>(a.n_rows);
  std::vector<std::vector<uint64_t>> levels(static_cast<size_t>(top) + 1);
  levels[static_cast<size_t>(top)] = masks;
  auto& roots = levels[static_cast<size_t>(top)];
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (int lev = top; lev > 0; --lev) {
    const RowSupport& row = sup[a.n_rows - static_cast<std::size_t>(lev)];
    std::vector<uint64_t>& next = levels[static_cast<size_t>(lev) - 1];
    for (uint64_t mask : levels[static_cast<size_t>(lev)])
      for (int c : row.cols)
        if ((mask >> c) & 1) next.push_back(mask & ~(uint64_t{1} << c));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
  }

  std::vector<Poly> prev_vals, cur_vals;
  std::vector<uint64_t> prev_masks;
  for (int lev = 0; lev <= top; ++lev) {
    const std::vector<uint64_t>& cur = levels[static_cast<size_t>(lev)];
    cur_vals.assign(cur.size(), Poly(a.k));
    if (lev == 0) {
      for (Poly& p : cur_vals) p = Poly::constant(a.k, 1);
    } else {
      const RowSupport& row = sup[a.n_rows - static_cast<std::size_t>(lev)];
      auto lookup = [&](uint64_t child) -> const Poly& {
        auto it = std::lower_bound(prev_masks.begin(), prev_masks.end(), child);
        return prev_vals[static_cast<size_t>(it - prev_masks.begin())];
      };
#pragma omp parallel for schedule(dynamic, 16)
      for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(cur.size()); ++idx) {
        uint64_t mask = cur[static_cast<size_t>(idx)];
        Poly acc(a.k);
        for (std::size_t e = 0; e < row.cols.size(); ++e) {
          int c = row.cols[e];
          if (!((mask >> c) & 1)) continue;
          const Poly& sub = lookup(mask & ~(uint64_t{1} << c));
          if (sub.is_zero()) continue;
          Poly prod = *row.entries[e] * sub;
          int pos = std::popcount(mask & ((uint64_t{1} << c) - 1));
          acc += (pos % 2 == 0) ? prod : -prod;
        }
        cur_vals[static_cast<size_t>(idx)] = std::move(acc);
      }
    }
    prev_vals = std::move(cur_vals);
    prev_masks = cur;
  }

  std::vector<Poly> out;
  out.reserve(masks.size());
  for (uint64_t mask : masks) {
    auto it = std::lower_bound(prev_masks.begin(), prev_masks.end(), mask);
    out.push_back(prev_vals[static_cast<size_t>(it - prev_masks.begin())]);
  }
  return out;
}

}  // namespace

std::vector<Poly> column_minors(const PolyMatrix& a,
                                const std::vector<uint64_t>& masks, Exec exec) {
  if (a.n_cols > 63) throw std::invalid_argument("column_minors: too many columns");
  if (a.n_rows > a.n_cols)
    throw std::invalid_argument("column_minors: more rows than columns");
  for (uint64_t mask : masks) {
    if (mask >> a.n_cols)
      throw std::invalid_argument("column_minors: mask selects a missing column");
    if (std::popcount(mask) != static_cast<int>(a.n_rows))
      throw std::invalid_argument("column_minors: mask size must equal row count");
  }
  std::vector<RowSupport> sup = build_support(a);
  if (exec == Exec::parallel) return parallel_minors(a, sup, masks);
  SerialMinors engine(a, sup);
  std::vector<Poly> out;
  out.reserve(masks.size());
  for (uint64_t mask : masks) out.push_back(engine.minor(mask));
  return out;
}

Poly det(const PolyMatrix& m, Exec exec) {
  if (m.n_rows != m.n_cols) throw std::invalid_argument("det: matrix is not square");
  if (m.n_rows == 0) return Poly::constant(m.k, 1);
  uint64_t full = (m.n_cols >= 64) ? ~uint64_t{0} : ((uint64_t{1} << m.n_cols) - 1);
  return column_minors(m, {full}, exec).front();
}

Poly det_bareiss(const PolyMatrix& m) {
  if (m.n_rows != m.n_cols) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.n_rows;
  if (n == 0) return Poly::constant(m.k, 1);
  std::vector<std::vector<Poly>> w(n, std::vector<Poly>(n, Poly(m.k)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) w[r][c] = m.at(r, c);

  int sign = 1;
  Poly prev = Poly::constant(m.k, 1);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t pivot = step;
    while (pivot < n && w[pivot][step].is_zero()) ++pivot;
    if (pivot == n) return Poly(m.k);
    if (pivot != step) {
      std::swap(w[pivot], w[step]);
      sign = -sign;
    }
    for (std::size_t i = step + 1; i < n; ++i) {
      for (std::size_t j = step + 1; j < n; ++j) {
        Poly num = w[step][step] * w[i][j] - w[i][step] * w[step][j];
        w[i][j] = num.divexact(prev);
      }
      w[i][step] = Poly(m.k);
    }
    prev = w[step][step];
  }
  Poly result = w[n - 1][n - 1];
  return sign > 0 ? result : -result;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

int rank_mod(std::vector<std::vector<uint64_t>> rows, uint64_t p) {
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = n_rows ? rows[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n_cols && r < n_rows; ++col) {
    std::size_t pivot = r;
    while (pivot < n_rows && rows[pivot][col] == 0) ++pivot;
    if (pivot == n_rows) continue;
    std::swap(rows[pivot], rows[r]);
    uint64_t inv = powmod_u64(rows[r][col], p - 2, p);
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      if (rows[i][col] == 0) continue;
      uint64_t f = mulmod_u64(rows[i][col], inv, p);
      for (std::size_t j = col; j < n_cols; ++j) {
        uint64_t sub = mulmod_u64(f, rows[r][j], p);
        rows[i][j] = (rows[i][j] + p - sub) % p;
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

int rank_one_trial(const PolyMatrix& m, uint64_t prime, uint64_t trial_seed) {
  // mt19937_64 and reduction by % are pinned so results reproduce across
  // platforms for a given seed.
  std::mt19937_64 rng(trial_seed);
  std::vector<uint64_t> values(static_cast<size_t>(pair_count(m.k)));
  for (uint64_t& v : values) v = rng() % prime;
  std::vector<std::vector<uint64_t>> rows(m.n_rows, std::vector<uint64_t>(m.n_cols));
  for (std::size_t r = 0; r < m.n_rows; ++r)
    for (std::size_t c = 0; c < m.n_cols; ++c)
      rows[r][c] = m.at(r, c).eval_mod(values, prime);
  return rank_mod(std::move(rows), prime);
}

}  // namespace

int generic_rank(const PolyMatrix& m, const RankOptions& opt, Exec exec) {
  if (opt.prime < (uint64_t{1} << 20))
    throw std::invalid_argument("generic_rank: prime too small (< 2^20)");
  if (opt.prime >= (uint64_t{1} << 62))
    throw std::invalid_argument("generic_rank: prime must be < 2^62");
  if (opt.trials < 1) throw std::invalid_argument("generic_rank: trials must be >= 1");

  int best = 0;
  if (exec == Exec::parallel) {
#pragma omp parallel for reduction(max : best)
    for (int t = 0; t < opt.trials; ++t)
      best = std::max(best, rank_one_trial(m, opt.prime, splitmix64(opt.seed + static_cast<uint64_t>(t))));
  } else {
    for (int t = 0; t < opt.trials; ++t)
      best = std::max(best, rank_one_trial(m, opt.prime, splitmix64(opt.seed + static_cast<uint64_t>(t))));
  }
  return best;
}

}  // namespace linkhom
