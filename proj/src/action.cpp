#include "linkhom/action.hpp"

#include <stdexcept>

namespace linkhom {

TripleIndex::TripleIndex(int a, int b, int c) : r(a), s(b), t(c) {
  if (!(1 <= a && a < b && b < c))
    throw std::invalid_argument("TripleIndex: need 1 <= r < s < t");
}

int triple_count(int k) { return k * (k - 1) * (k - 2) / 6; }

int triple_rank(int k, TripleIndex t) {
  if (t.t > k)
    throw std::invalid_argument("triple_rank: " + to_string(t) +
                                " out of range for k=" + std::to_string(k));
  int rank = 0;
  for (int a = 1; a < t.r; ++a) rank += (k - a) * (k - a - 1) / 2;
  for (int b = t.r + 1; b < t.s; ++b) rank += k - b;
  return rank + (t.t - t.s - 1);
}

TripleIndex triple_unrank(int k, int rank) {
  for (int r = 1; r <= k - 2; ++r)
    for (int s = r + 1; s <= k - 1; ++s) {
      int block = k - s;
      if (rank < block) return TripleIndex(r, s, s + 1 + rank);
      rank -= block;
    }
  throw std::invalid_argument("triple_unrank: rank out of range");
}

std::string to_string(TripleIndex t) {
  return "(" + std::to_string(t.r) + "," + std::to_string(t.s) + "," +
         std::to_string(t.t) + ")";
}

namespace {

void check_pair_args(int k, int i, int j) {
  if (k < 3 || k > kMaxStrands)
    throw std::invalid_argument("strand count must be in 3.." + std::to_string(kMaxStrands));
  if (i == j) throw std::invalid_argument("strand indices must differ");
  if (i < 1 || i > k || j < 1 || j > k)
    throw std::invalid_argument("strand index out of 1..k");
}

// Role-based coordinate of the partial conjugation i^j at a triple known to
// contain both i and j.
Poly partial_coord(int k, int i, int j, TripleIndex tri) {
  auto role = [&](int x) { return x == tri.r ? 'r' : (x == tri.s ? 's' : 't'); };
  char ri = role(i), rj = role(j);
  int sign;
  PairVar var(1, 2);
  if (ri == 't' && rj == 'r') {
    sign = +1; var = PairVar(tri.s, tri.t);
  } else if (ri == 't' && rj == 's') {
    sign = -1; var = PairVar(tri.r, tri.t);
  } else if (ri == 's' && rj == 'r') {
    sign = -1; var = PairVar(tri.s, tri.t);
  } else if (ri == 's' && rj == 't') {
    sign = +1; var = PairVar(tri.r, tri.s);
  } else if (ri == 'r' && rj == 's') {
    sign = +1; var = PairVar(tri.r, tri.t);
  } else {  // ri == 'r' && rj == 't'
    sign = -1; var = PairVar(tri.r, tri.s);
  }
  Poly p = Poly::variable(k, var);
  return sign > 0 ? p : -p;
}

}  // namespace

TranslationVector partial_conj_vector(int k, int i, int j) {
  check_pair_args(k, i, j);
  TranslationVector v;
  v.k = k;
  v.label = "partial(" + std::to_string(i) + "," + std::to_string(j) + ")";
  v.coords.assign(static_cast<size_t>(triple_count(k)), Poly(k));
  for (int rank = 0; rank < triple_count(k); ++rank) {
    TripleIndex tri = triple_unrank(k, rank);
    if (tri.contains(i) && tri.contains(j))
      v.coords[static_cast<size_t>(rank)] = partial_coord(k, i, j, tri);
  }
  return v;
}

TranslationVector conj_vector(int k, int i, int j) {
  check_pair_args(k, i, j);
  TranslationVector a = partial_conj_vector(k, i, j);
  TranslationVector b = partial_conj_vector(k, j, i);
  TranslationVector v;
  v.k = k;
  v.label = "conj(" + std::to_string(std::min(i, j)) + "," +
            std::to_string(std::max(i, j)) + ")";
  v.coords.reserve(a.coords.size());
  for (size_t t = 0; t < a.coords.size(); ++t)
    v.coords.push_back(a.coords[t] + b.coords[t]);
  return v;
}

TranslationVector reversal_vector(int k) {
  if (k < 3 || k > kMaxStrands)
    throw std::invalid_argument("strand count must be in 3.." + std::to_string(kMaxStrands));
  TranslationVector v;
  v.k = k;
  v.label = "reversal";
  v.coords.reserve(static_cast<size_t>(triple_count(k)));
  for (int rank = 0; rank < triple_count(k); ++rank) {
    TripleIndex tri = triple_unrank(k, rank);
    Poly rs = Poly::variable(k, PairVar(tri.r, tri.s));
    Poly rt = Poly::variable(k, PairVar(tri.r, tri.t));
    Poly st = Poly::variable(k, PairVar(tri.s, tri.t));
    v.coords.push_back(-(rs * rt) + rs * st - rt * st);
  }
  return v;
}

std::vector<TranslationVector> all_partial_conj_vectors(int k) {
  std::vector<TranslationVector> out;
  out.reserve(static_cast<size_t>(k) * (k - 1));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (i != j) out.push_back(partial_conj_vector(k, i, j));
  return out;
}

std::vector<TranslationVector> all_conj_vectors(int k) {
  std::vector<TranslationVector> out;
  out.reserve(static_cast<size_t>(pair_count(k)));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) out.push_back(conj_vector(k, i, j));
  return out;
}

std::vector<Int> apply_translation(const std::vector<Int>& mu,
                                   const TranslationVector& v,
                                   const std::map<PairVar, Int>& l) {
  if (mu.size() != v.coords.size())
    throw std::invalid_argument("apply_translation: mu length " +
                                std::to_string(mu.size()) + " != vector length " +
                                std::to_string(v.coords.size()));
  std::vector<Int> out;
  out.reserve(mu.size());
  for (size_t t = 0; t < mu.size(); ++t) out.push_back(mu[t] + v.coords[t].eval(l));
  return out;
}

std::vector<Int> apply_reversal(const std::vector<Int>& mu, int k,
                                const std::map<PairVar, Int>& l) {
  TranslationVector r = reversal_vector(k);
  if (mu.size() != r.coords.size())
    throw std::invalid_argument("apply_reversal: mu length does not match k");
  std::vector<Int> out;
  out.reserve(mu.size());
  for (size_t t = 0; t < mu.size(); ++t) out.push_back(-mu[t] + r.coords[t].eval(l));
  return out;
}

bool RelationReport::all_passed() const {
  for (const IdentityCheck& c : identities)
    if (!c.passed) return false;
  return true;
}

RelationReport relation_check(int k) {
  if (k < 3 || k > kMaxStrands)
    throw std::invalid_argument("strand count must be in 3.." + std::to_string(kMaxStrands));
  RelationReport report;
  report.k = k;
  int nt = triple_count(k);
  for (int i = 1; i <= k; ++i) {
    std::vector<Poly> sum(static_cast<size_t>(nt), Poly(k));
    for (int j = 1; j <= k; ++j) {
      if (j == i) continue;
      TranslationVector v = partial_conj_vector(k, j, i);
      for (int t = 0; t < nt; ++t) sum[static_cast<size_t>(t)] += v.coords[static_cast<size_t>(t)];
    }
    bool zero = true;
    for (const Poly& p : sum) zero = zero && p.is_zero();
    report.identities.push_back(
        {"sum over j of partial(j," + std::to_string(i) + ") == 0", zero});
  }
  for (int i = 1; i <= k; ++i) {
    std::vector<Poly> sum(static_cast<size_t>(nt), Poly(k));
    for (int j = 1; j <= k; ++j) {
      if (j == i) continue;
      TranslationVector v = partial_conj_vector(k, i, j);
      Poly lij = Poly::variable(k, PairVar(i, j));
      for (int t = 0; t < nt; ++t)
        sum[static_cast<size_t>(t)] += lij * v.coords[static_cast<size_t>(t)];
    }
    bool zero = true;
    for (const Poly& p : sum) zero = zero && p.is_zero();
    report.identities.push_back(
        {"sum over j of l(" + std::to_string(i) + ",j)*partial(" + std::to_string(i) +
             ",j) == 0",
         zero});
  }
  return report;
}

}  // namespace linkhom
