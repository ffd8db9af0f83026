#include "linkhom/invariant.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace linkhom {

Int invariant_value(const OmegaCertificate& cert, const LinkData& link) {
  if (link.k != cert.k)
    throw std::invalid_argument("invariant: link has k=" + std::to_string(link.k) +
                                " but certificate has k=" + std::to_string(cert.k));
  if (link.mu.size() != cert.omega.size())
    throw std::invalid_argument("invariant: mu-vector length mismatch");
  std::vector<Int> omega_at_l = eval_all(cert.omega, link.l);
  Int total = 0;
  for (std::size_t t = 0; t < link.mu.size(); ++t) total += link.mu[t] * omega_at_l[t];
  return total;
}

LinkData link_from_word(const BraidWord& w, Exec exec) { return mu_all(w, exec); }

LinkData parse_link_data(const std::string& text, int k) {
  if (k < 3 || k > kMaxStrands)
    throw std::invalid_argument("link data: strand count must be in 3.." +
                                std::to_string(kMaxStrands));
  LinkData data;
  data.k = k;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) data.l[PairVar(i, j)] = 0;
  data.mu.assign(static_cast<size_t>(triple_count(k)), 0);

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    auto fail = [&](const std::string& what) {
      throw std::invalid_argument("link data line " + std::to_string(lineno) + ": " + what);
    };
    if (key == "l") {
      int i = 0, j = 0;
      std::string value;
      if (!(ls >> i >> j >> value)) fail("expected 'l i j value'");
      if (i == j || i < 1 || j < 1 || i > k || j > k) fail("bad pair indices");
      data.l[PairVar(i, j)] = Int(value);
    } else if (key == "mu") {
      int r = 0, s = 0, t = 0;
      std::string value;
      if (!(ls >> r >> s >> t >> value)) fail("expected 'mu r s t value'");
      if (!(1 <= r && r < s && s < t && t <= k)) fail("need 1 <= r < s < t <= k");
      data.mu[static_cast<size_t>(triple_rank(k, TripleIndex(r, s, t)))] = Int(value);
    } else {
      fail("unknown key '" + key + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  return data;
}

LinkData read_link_data_file(const std::string& path, int k) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_link_data(buf.str(), k);
}

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Deterministic small-range draw; avoids std::uniform_int_distribution,
// whose output is not pinned across standard libraries.
long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

struct TrialSetup {
  std::map<PairVar, Int> l;
  std::vector<Int> mu;
  std::vector<std::pair<int, int>> moves;
};

TrialSetup make_trial(int k, const TrialOptions& opt, uint64_t trial_seed,
                      bool with_moves) {
  std::mt19937_64 rng(trial_seed);
  TrialSetup s;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      s.l[PairVar(i, j)] = draw(rng, -opt.l_range, opt.l_range);
  s.mu.reserve(static_cast<size_t>(triple_count(k)));
  for (int t = 0; t < triple_count(k); ++t)
    s.mu.push_back(draw(rng, -opt.mu_range, opt.mu_range));
  if (with_moves) {
    int len = static_cast<int>(draw(rng, 0, opt.max_seq_len));
    for (int m = 0; m < len; ++m) {
      int i = static_cast<int>(draw(rng, 1, k));
      int j = static_cast<int>(draw(rng, 1, k - 1));
      if (j >= i) ++j;
      s.moves.emplace_back(i, j);
    }
  }
  return s;
}

std::string describe_moves(const std::vector<std::pair<int, int>>& moves) {
  std::string out;
  for (auto [i, j] : moves)
    out += " partial(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return out.empty() ? " (empty)" : out;
}

template <typename TrialFn>
TrialReport run_trials(const TrialOptions& opt, Exec exec, TrialFn&& one_trial) {
  std::vector<std::string> results(static_cast<size_t>(opt.trials));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < opt.trials; ++t) results[static_cast<size_t>(t)] = one_trial(t);
  } else {
    for (int t = 0; t < opt.trials; ++t) results[static_cast<size_t>(t)] = one_trial(t);
  }
  TrialReport report;
  report.trials = opt.trials;
  for (std::string& r : results)
    if (!r.empty()) report.failures.push_back(std::move(r));
  return report;
}

}  // namespace

TrialReport homotopy_trials(const OmegaCertificate& cert, const TrialOptions& opt,
                            Exec exec) {
  const int k = cert.k;
  return run_trials(opt, exec, [&](int t) -> std::string {
    TrialSetup s = make_trial(k, opt, splitmix64(opt.seed + static_cast<uint64_t>(t)), true);
    std::vector<Int> omega_at_l = eval_all(cert.omega, s.l);
    auto value = [&](const std::vector<Int>& mu) {
      Int v = 0;
      for (std::size_t c = 0; c < mu.size(); ++c) v += mu[c] * omega_at_l[c];
      return v;
    };
    const Int start = value(s.mu);
    std::vector<Int> mu = s.mu;
    for (auto [i, j] : s.moves) {
      mu = apply_translation(mu, partial_conj_vector(k, i, j), s.l);
      if (value(mu) != start)
        return "trial " + std::to_string(t) + ": value changed along" +
               describe_moves(s.moves);
    }
    mu = apply_reversal(mu, k, s.l);
    if (value(mu) != -start)
      return "trial " + std::to_string(t) + ": reversal did not flip the sign exactly";
    return "";
  });
}

TrialReport reversal_trials(const OmegaCertificate& cert, const TrialOptions& opt,
                            Exec exec) {
  const int k = cert.k;
  return run_trials(opt, exec, [&](int t) -> std::string {
    TrialSetup s = make_trial(k, opt, splitmix64(opt.seed + static_cast<uint64_t>(t)), false);
    LinkData link{k, s.l, s.mu};
    LinkData reversed{k, s.l, apply_reversal(s.mu, k, s.l)};
    Int v = invariant_value(cert, link);
    Int vr = invariant_value(cert, reversed);
    if (vr != -v)
      return "trial " + std::to_string(t) + ": got " + vr.str() + ", expected " + (-v).str();
    return "";
  });
}

}  // namespace linkhom
