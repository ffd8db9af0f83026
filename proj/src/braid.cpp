#include "linkhom/braid.hpp"

#include <cctype>
#include <stdexcept>

namespace linkhom {

namespace {

void merge_letters(std::vector<BraidLetter>& letters) {
  std::vector<BraidLetter> out;
  for (const BraidLetter& l : letters) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().pair == l.pair) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  letters = std::move(out);
}

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
  throw std::invalid_argument("braid word at char " + std::to_string(pos) + ": " + what);
}

}  // namespace

BraidWord parse_word(std::string_view text, int k) {
  if (k < 2 || k > kMaxStrands)
    throw std::invalid_argument("parse_word: strand count must be in 2.." +
                                std::to_string(kMaxStrands));
  BraidWord w;
  w.k = k;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  auto read_int = [&](bool allow_sign) -> long long {
    std::size_t start = pos;
    if (allow_sign && pos < n && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits = pos;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) parse_fail(start, "expected an integer");
    return std::stoll(std::string(text.substr(start, pos - start)));
  };

  while (pos < n) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t tok_start = pos;
    if (text[pos] != 't') parse_fail(tok_start, "expected a generator token 'ti,j'");
    ++pos;
    long long i = read_int(false);
    if (pos >= n || text[pos] != ',') parse_fail(pos, "expected ',' between strand indices");
    ++pos;
    long long j = read_int(false);
    long long e = 1;
    if (pos < n && text[pos] == '^') {
      ++pos;
      e = read_int(true);
    }
    if (pos < n && !std::isspace(static_cast<unsigned char>(text[pos])))
      parse_fail(pos, "unexpected character in token");
    if (i == j) parse_fail(tok_start, "strand indices must differ");
    if (i < 1 || i > k || j < 1 || j > k)
      parse_fail(tok_start, "strand index out of 1.." + std::to_string(k));
    w.letters.push_back({PairVar(static_cast<int>(i), static_cast<int>(j)), e});
  }
  merge_letters(w.letters);
  return w;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const BraidLetter& l : w.letters) {
    if (!out.empty()) out += " ";
    out += "t" + std::to_string(l.pair.i) + "," + std::to_string(l.pair.j);
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

std::map<PairVar, Int> linking_matrix(const BraidWord& w) {
  std::map<PairVar, Int> l;
  for (int i = 1; i <= w.k; ++i)
    for (int j = i + 1; j <= w.k; ++j) l[PairVar(i, j)] = 0;
  for (const BraidLetter& letter : w.letters) l[letter.pair] += letter.exp;
  return l;
}

NormalForm3 collect3(const BraidWord& w, TripleIndex tri) {
  const PairVar rs(tri.r, tri.s), rt(tri.r, tri.t), st(tri.s, tri.t);
  NormalForm3 nf;
  for (const BraidLetter& l : w.letters) {
    if (l.pair == rs) {
      nf.delta += Int(l.exp) * (nf.gamma - nf.beta);
      nf.alpha += l.exp;
    } else if (l.pair == rt) {
      nf.delta -= Int(l.exp) * nf.gamma;
      nf.beta += l.exp;
    } else if (l.pair == st) {
      nf.gamma += l.exp;
    } else {
      throw std::invalid_argument("collect3: letter on " + to_string(l.pair) +
                                  " outside the triple " + to_string(tri));
    }
  }
  return nf;
}

BraidWord subword_on_triple(const BraidWord& w, TripleIndex tri) {
  BraidWord out;
  out.k = w.k;
  for (const BraidLetter& l : w.letters)
    if (tri.contains(l.pair.i) && tri.contains(l.pair.j)) out.letters.push_back(l);
  merge_letters(out.letters);
  return out;
}

LinkData mu_all(const BraidWord& w, Exec exec) {
  if (w.k < 3) throw std::invalid_argument("mu_all: need at least 3 strands");
  LinkData data;
  data.k = w.k;
  data.l = linking_matrix(w);
  const int nt = triple_count(w.k);
  data.mu.assign(static_cast<size_t>(nt), 0);

  auto one_triple = [&](int rank) {
    TripleIndex tri = triple_unrank(w.k, rank);
    const PairVar rs(tri.r, tri.s), rt(tri.r, tri.t), st(tri.s, tri.t);
    NormalForm3 nf;
    for (const BraidLetter& l : w.letters) {
      if (l.pair == rs) {
        nf.delta += Int(l.exp) * (nf.gamma - nf.beta);
        nf.alpha += l.exp;
      } else if (l.pair == rt) {
        nf.delta -= Int(l.exp) * nf.gamma;
        nf.beta += l.exp;
      } else if (l.pair == st) {
        nf.gamma += l.exp;
      }
      // letters meeting a strand outside the triple are deleted
    }
    data.mu[static_cast<size_t>(rank)] = nf.delta;
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int rank = 0; rank < nt; ++rank) one_triple(rank);
  } else {
    for (int rank = 0; rank < nt; ++rank) one_triple(rank);
  }
  return data;
}

BraidWord reverse_word(const BraidWord& w) {
  BraidWord out;
  out.k = w.k;
  out.letters.assign(w.letters.rbegin(), w.letters.rend());
  merge_letters(out.letters);
  return out;
}

BraidWord conjugate_word(const BraidWord& w, BraidLetter g) {
  if (g.pair.j > w.k) throw std::invalid_argument("conjugate_word: generator out of range");
  BraidWord out;
  out.k = w.k;
  out.letters.reserve(w.letters.size() + 2);
  out.letters.push_back(g);
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  out.letters.push_back({g.pair, -g.exp});
  merge_letters(out.letters);
  return out;
}

}  // namespace linkhom
