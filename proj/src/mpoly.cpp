#include "linkhom/mpoly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace linkhom {

PairVar::PairVar(int a, int b) {
  if (a == b) throw std::invalid_argument("PairVar: indices must differ");
  if (a > b) std::swap(a, b);
  if (a < 1) throw std::invalid_argument("PairVar: strand indices are 1-based");
  i = a;
  j = b;
}

int pair_count(int k) { return k * (k - 1) / 2; }

int pair_rank(int k, PairVar v) {
  if (v.j > k)
    throw std::invalid_argument("pair_rank: " + to_string(v) +
                                " out of range for k=" + std::to_string(k));
  // pairs (a,*) with a < i come first, then (i,i+1)..(i,j)
  return (v.i - 1) * (2 * k - v.i) / 2 + (v.j - v.i - 1);
}

PairVar pair_unrank(int k, int rank) {
  for (int i = 1; i < k; ++i) {
    int block = k - i;
    if (rank < block) return PairVar(i, i + 1 + rank);
    rank -= block;
  }
  throw std::invalid_argument("pair_unrank: rank out of range");
}

std::string to_string(PairVar v) {
  return "l(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

void Monomial::set_exponent(int var, int e) {
  if (var < 0 || var >= kMaxVars)
    throw std::invalid_argument("Monomial: variable index out of range");
  if (e < 0 || e > 255) throw std::invalid_argument("Monomial: bad exponent");
  auto& slot = exp_[static_cast<size_t>(var)];
  degree_ = static_cast<uint16_t>(degree_ - slot + e);
  slot = static_cast<uint8_t>(e);
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r = *this;
  for (int v = 0; v < kMaxVars; ++v) {
    int e = r.exp_[static_cast<size_t>(v)] + o.exp_[static_cast<size_t>(v)];
    if (e > 255) throw std::overflow_error("Monomial: exponent overflow");
    r.exp_[static_cast<size_t>(v)] = static_cast<uint8_t>(e);
  }
  r.degree_ = static_cast<uint16_t>(degree_ + o.degree_);
  return r;
}

Monomial Monomial::times_var(int var) const {
  Monomial r = *this;
  r.set_exponent(var, r.exponent(var) + 1);
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (int v = 0; v < kMaxVars; ++v)
    if (exp_[static_cast<size_t>(v)] < o.exp_[static_cast<size_t>(v)]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  Monomial r;
  for (int v = 0; v < kMaxVars; ++v)
    r.exp_[static_cast<size_t>(v)] =
        static_cast<uint8_t>(exp_[static_cast<size_t>(v)] - o.exp_[static_cast<size_t>(v)]);
  r.degree_ = static_cast<uint16_t>(degree_ - o.degree_);
  return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
  // graded lex tie-break: larger exponent on the earliest variable wins
  return std::memcmp(a.exp_.data(), b.exp_.data(), kMaxVars);
}

Poly::Poly(int k) : k_(k) {
  if (k < 0 || k > kMaxStrands)
    throw std::invalid_argument("Poly: strand count must be in 0.." +
                                std::to_string(kMaxStrands));
}

Poly Poly::constant(int k, Int c) {
  Poly p(k);
  if (c != 0) p.terms_.push_back({Monomial{}, std::move(c)});
  return p;
}

Poly Poly::variable(int k, PairVar v) {
  Poly p(k);
  Monomial m;
  m.set_exponent(pair_rank(k, v), 1);
  p.terms_.push_back({m, 1});
  return p;
}

Poly Poly::from_terms(int k, std::vector<Term> terms) {
  Poly p(k);
  int nv = pair_count(k);
  for (const Term& t : terms)
    for (int v = nv; v < kMaxVars; ++v)
      if (t.mono.exponent(v) != 0)
        throw std::invalid_argument("Poly: monomial uses a variable outside the universe");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return Monomial::compare(a.mono, b.mono) > 0;
  });
  for (Term& t : terms) {
    if (t.coeff == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Poly::merged_k(const Poly& a, const Poly& b) {
  if (a.k_ == 0 || b.k_ == 0 || a.k_ == b.k_) return std::max(a.k_, b.k_);
  throw std::invalid_argument("Poly: mixed variable universes (k=" +
                              std::to_string(a.k_) + " vs k=" +
                              std::to_string(b.k_) + ")");
}

Poly Poly::operator-() const {
  Poly r(k_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r(Poly::merged_k(a, b));
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ea = a.terms_.end();
  auto ib = b.terms_.begin(), eb = b.terms_.end();
  while (ia != ea && ib != eb) {
    int c = Monomial::compare(ia->mono, ib->mono);
    if (c > 0) {
      r.terms_.push_back(*ia++);
    } else if (c < 0) {
      r.terms_.push_back(*ib++);
    } else {
      Int s = ia->coeff + ib->coeff;
      if (s != 0) r.terms_.push_back({ia->mono, std::move(s)});
      ++ia;
      ++ib;
    }
  }
  r.terms_.insert(r.terms_.end(), ia, ea);
  r.terms_.insert(r.terms_.end(), ib, eb);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly& Poly::operator+=(const Poly& o) { return *this = *this + o; }
Poly& Poly::operator-=(const Poly& o) { return *this = *this + (-o); }

Poly Poly::times_monomial(const Monomial& m, const Int& c) const {
  Poly r(k_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono.times(m), t.coeff * c});
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  int k = Poly::merged_k(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(k);
  const Poly& small = a.term_count() <= b.term_count() ? a : b;
  const Poly& big = a.term_count() <= b.term_count() ? b : a;
  if (small.term_count() == 1) {
    Poly r = big.times_monomial(small.terms_[0].mono, small.terms_[0].coeff);
    r.k_ = k;
    return r;
  }
  std::map<Monomial, Int, MonomialGreater> acc;
  for (const Poly::Term& s : small.terms_)
    for (const Poly::Term& t : big.terms_) acc[s.mono.times(t.mono)] += s.coeff * t.coeff;
  Poly r(k);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  return r;
}

bool Poly::terms_same(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t t = 0; t < terms_.size(); ++t)
    if (!(terms_[t].mono == o.terms_[t].mono) || terms_[t].coeff != o.terms_[t].coeff)
      return false;
  return true;
}

Poly Poly::divexact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("divexact: division by zero");
  int k = merged_k(*this, divisor);
  Poly q(k);
  Poly r = *this;
  const Term& lead = divisor.terms_.front();
  while (!r.is_zero()) {
    const Term& lr = r.terms_.front();
    if (!lr.mono.divisible_by(lead.mono))
      throw std::domain_error("divexact: not an exact division");
    Int qc = lr.coeff / lead.coeff;
    if (qc * lead.coeff != lr.coeff)
      throw std::domain_error("divexact: not an exact division");
    Term t{lr.mono.divided_by(lead.mono), std::move(qc)};
    r -= divisor.times_monomial(t.mono, t.coeff);
    q.terms_.push_back(std::move(t));  // quotient terms arrive in descending order
  }
  return q;
}

Monomial Poly::var_monomial(PairVar v) const {
  Monomial m;
  m.set_exponent(pair_rank(k_, v), 1);
  return m;
}

namespace {

// Shared power table for evaluating many polynomials at one point.
class Evaluator {
 public:
  Evaluator(int k, const std::map<PairVar, Int>& assignment,
            const std::optional<Int>& modulus)
      : k_(k), assignment_(assignment), modulus_(modulus), powers_(pair_count(k)) {}

  Int eval(const Poly& p) {
    Int total = 0;
    for (const Poly::Term& t : p.terms()) {
      Int prod = t.coeff;
      for (int v = 0; v < pair_count(k_); ++v) {
        int e = t.mono.exponent(v);
        if (e == 0) continue;
        prod *= power(v, e);
        if (modulus_) prod %= *modulus_;
      }
      total += prod;
      if (modulus_) total %= *modulus_;
    }
    if (modulus_ && total < 0) total += *modulus_;
    return total;
  }

 private:
  const Int& power(int v, int e) {
    auto& col = powers_[static_cast<size_t>(v)];
    if (col.empty()) {
      PairVar pv = pair_unrank(k_, v);
      auto it = assignment_.find(pv);
      if (it == assignment_.end())
        throw std::invalid_argument("eval: unassigned variable " + to_string(pv));
      col.push_back(1);
      col.push_back(modulus_ ? Int(it->second % *modulus_) : it->second);
    }
    while (static_cast<int>(col.size()) <= e) {
      Int next = col.back() * col[1];
      if (modulus_) next %= *modulus_;
      col.push_back(std::move(next));
    }
    return col[static_cast<size_t>(e)];
  }

  int k_;
  const std::map<PairVar, Int>& assignment_;
  const std::optional<Int>& modulus_;
  std::vector<std::vector<Int>> powers_;
};

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

Int Poly::eval(const std::map<PairVar, Int>& assignment,
               const std::optional<Int>& modulus) const {
  if (modulus && *modulus < 2) throw std::invalid_argument("eval: modulus must be >= 2");
  Evaluator ev(k_, assignment, modulus);
  return ev.eval(*this);
}

uint64_t Poly::eval_mod(const std::vector<uint64_t>& values_by_rank,
                        uint64_t prime) const {
  uint64_t total = 0;
  for (const Term& t : terms_) {
    Int c = t.coeff % prime;
    if (c < 0) c += prime;
    uint64_t prod = static_cast<uint64_t>(c);
    for (int v = 0; v < var_count(); ++v) {
      int e = t.mono.exponent(v);
      if (e == 0) continue;
      if (v >= static_cast<int>(values_by_rank.size()))
        throw std::invalid_argument("eval_mod: assignment vector too short");
      uint64_t base = values_by_rank[static_cast<size_t>(v)] % prime;
      for (int q = 0; q < e; ++q) prod = mulmod(prod, base, prime);
    }
    total = (total + prod) % prime;
  }
  return total;
}

PolyMeasure Poly::measure() const {
  PolyMeasure m;
  m.term_count = terms_.size();
  if (terms_.empty()) return m;  // (0, 0, true, 0) by convention
  m.total_degree = terms_.front().mono.degree();
  m.homogeneous = terms_.back().mono.degree() == m.total_degree;
  for (const Term& t : terms_) m.content = boost::multiprecision::gcd(m.content, Int(abs(t.coeff)));
  return m;
}

std::string Poly::canonical_text() const {
  std::string out;
  for (const Term& t : terms_) {
    out += (t.coeff < 0 ? "-" : "+");
    out += Int(abs(t.coeff)).str();
    for (int v = 0; v < var_count(); ++v) {
      int e = t.mono.exponent(v);
      if (e == 0) continue;
      out += " " + to_string(pair_unrank(k_, v));
      if (e != 1) out += "^" + std::to_string(e);
    }
    out += "\n";
  }
  return out;
}

Poly Poly::parse_canonical_text(int k, std::string_view text) {
  std::vector<Term> terms;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok))
      continue;
    Term t;
    try {
      t.coeff = Int(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("polynomial text line " + std::to_string(lineno) +
                                  ": bad coefficient '" + tok + "'");
    }
    while (ls >> tok) {
      int a = 0, b = 0, e = 1;
      char l = 0, open = 0, comma = 0, close = 0;
      std::istringstream fs(tok);
      fs >> l >> open >> a >> comma >> b >> close;
      bool ok = !fs.fail() && l == 'l' && open == '(' && comma == ',' && close == ')';
      if (ok && fs.peek() == '^') {
        char caret = 0;
        fs >> caret >> e;
        ok = !fs.fail();
      }
      if (ok) {
        std::string rest;
        fs >> rest;
        ok = rest.empty();
      }
      if (!ok || e < 1)
        throw std::invalid_argument("polynomial text line " + std::to_string(lineno) +
                                    ": bad factor '" + tok + "'");
      t.mono.set_exponent(pair_rank(k, PairVar(a, b)), t.mono.exponent(pair_rank(k, PairVar(a, b))) + e);
    }
    terms.push_back(std::move(t));
  }
  return from_terms(k, std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << "0";
  std::string text = p.canonical_text();
  for (char& c : text)
    if (c == '\n') c = ' ';
  if (!text.empty()) text.pop_back();
  return os << text;
}

std::vector<Int> eval_all(const std::vector<Poly>& polys,
                          const std::map<PairVar, Int>& assignment) {
  std::vector<Int> out;
  out.reserve(polys.size());
  int k = 0;
  for (const Poly& p : polys) k = std::max(k, p.k());
  Evaluator ev(k, assignment, std::nullopt);
  for (const Poly& p : polys) out.push_back(ev.eval(p));
  return out;
}

}  // namespace linkhom
