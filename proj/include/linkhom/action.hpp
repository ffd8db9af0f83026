#pragma once

#include <map>
#include <string>
#include <vector>

#include "linkhom/mpoly.hpp"

namespace linkhom {

/// Ordered strand triple 1 <= r < s < t <= k, ranked lexicographically into
/// 0..C(k,3)-1.
struct TripleIndex {
  int r = 0, s = 0, t = 0;

  TripleIndex() = default;
  TripleIndex(int a, int b, int c);  // requires a < b < c

  bool contains(int x) const { return x == r || x == s || x == t; }
  auto operator<=>(const TripleIndex&) const = default;
};

int triple_count(int k);  // C(k,3)
int triple_rank(int k, TripleIndex t);
TripleIndex triple_unrank(int k, int rank);
std::string to_string(TripleIndex t);

/// Linking numbers plus the triple linking vector of a concrete (string)
/// link: l maps every pair to an integer, mu is indexed by triple rank.
struct LinkData {
  int k = 0;
  std::map<PairVar, Int> l;
  std::vector<Int> mu;
};

/// The fixed vector added to the mu-vector by a basic move. Coordinates are
/// polynomials in the linking numbers, indexed by triple rank.
struct TranslationVector {
  int k = 0;
  std::string label;  // "partial(i,j)", "conj(i,j)" or "reversal"
  std::vector<Poly> coords;
};

/// Translation of the mu-vector under the partial conjugation that rewrites
/// the i-th factor through the pair (i,j). The coordinate at a triple
/// (r,s,t) containing both i and j depends on the roles i and j take:
///
///   i=t,j=r -> +l(s,t)    i=t,j=s -> -l(r,t)
///   i=s,j=r -> -l(s,t)    i=s,j=t -> +l(r,s)
///   i=r,j=s -> +l(r,t)    i=r,j=t -> -l(r,s)
///
/// Triples sharing at most one strand with {i,j} are unchanged, so exactly
/// k-2 coordinates are nonzero.
TranslationVector partial_conj_vector(int k, int i, int j);

/// Translation under conjugation by the elementary braid on (i,j); equals
/// partial_conj_vector(k,i,j) + partial_conj_vector(k,j,i) coordinatewise.
TranslationVector conj_vector(int k, int i, int j);

/// Translation part of the all-components orientation reversal: every
/// coordinate is -l(r,s)l(r,t) + l(r,s)l(s,t) - l(r,t)l(s,t).
TranslationVector reversal_vector(int k);

/// All k(k-1) partial-conjugation vectors, ordered (1,2),(1,3),..,(1,k),
/// (2,1),(2,3),..,(k,k-1).
std::vector<TranslationVector> all_partial_conj_vectors(int k);

/// All C(k,2) conjugation vectors in pair-rank order.
std::vector<TranslationVector> all_conj_vectors(int k);

/// mu[t] + coords[t](l) for every triple rank t.
std::vector<Int> apply_translation(const std::vector<Int>& mu,
                                   const TranslationVector& v,
                                   const std::map<PairVar, Int>& l);

/// Orientation reversal on the mu-vector: -mu + reversal_vector(k)(l).
/// Involution for every l.
std::vector<Int> apply_reversal(const std::vector<Int>& mu, int k,
                                const std::map<PairVar, Int>& l);

struct IdentityCheck {
  std::string name;
  bool passed = false;
};

struct RelationReport {
  int k = 0;
  std::vector<IdentityCheck> identities;  // 2k entries
  bool all_passed() const;
};

/// Verifies, as exact polynomial-vector identities, that for every strand i
/// the partial-conjugation translations satisfy
///   sum over j != i of partial(j,i)          == 0
///   sum over j != i of l(i,j) * partial(i,j) == 0
RelationReport relation_check(int k);

}  // namespace linkhom
