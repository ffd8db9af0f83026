#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "linkhom/action.hpp"
#include "linkhom/mpoly.hpp"
#include "linkhom/polymatrix.hpp"

namespace linkhom {

struct BraidLetter {
  PairVar pair;
  long long exp = 0;  // nonzero
};

/// Word in the elementary pure-braid generators t(i,j) = t(j,i).
struct BraidWord {
  int k = 0;
  std::vector<BraidLetter> letters;
};

/// Grammar: whitespace-separated tokens `t<i>,<j>` with an optional
/// `^<signed exponent>`, e.g. `t1,3 t2,3 t1,3^-1 t2,3^-1`. Adjacent letters
/// on the same pair are merged; a vanishing exponent drops the letter.
BraidWord parse_word(std::string_view text, int k);
std::string to_string(const BraidWord& w);

/// Exponent sum per pair (the abelianization). Every pair of 1..k is
/// present in the result, zeros included.
std::map<PairVar, Int> linking_matrix(const BraidWord& w);

/// Normal-form data of a 3-strand word on the triple (r,s,t):
/// alpha = l(r,s), beta = l(r,t), gamma = l(s,t), delta = mu(rst).
struct NormalForm3 {
  Int alpha = 0, beta = 0, gamma = 0, delta = 0;
  bool operator==(const NormalForm3&) const = default;
};

/// Collects a word on the three pairs of the triple into normal form by a
/// streaming left-to-right pass. In the class-2 quotient the commutator
/// c = [t(r,t),t(s,t)] is central with [t(r,s),t(r,t)] = c and
/// [t(r,s),t(s,t)] = c^-1, which gives the update rules
///   append (r,s)^e: alpha += e, delta += e*(gamma - beta)
///   append (r,t)^e: beta  += e, delta -= e*gamma
///   append (s,t)^e: gamma += e
/// Letters outside the triple's pairs are an error.
NormalForm3 collect3(const BraidWord& w, TripleIndex tri);

/// Image of the word under deleting every strand outside the triple:
/// letters touching a deleted strand are erased, the rest survive verbatim.
BraidWord subword_on_triple(const BraidWord& w, TripleIndex tri);

/// Linking numbers and all triple linking numbers of the word: for each
/// triple, delete the other strands and collect. The triples are
/// independent, so the parallel path splits them across threads.
LinkData mu_all(const BraidWord& w, Exec exec = Exec::serial);

/// Letters in reverse order, exponents unchanged (the orientation-reversal
/// anti-homomorphism on generators).
BraidWord reverse_word(const BraidWord& w);

/// g * w * g^-1 for a single-letter g, normalized.
BraidWord conjugate_word(const BraidWord& w, BraidLetter g);

}  // namespace linkhom
