// linkhom: exact computations around the degree-22 finite-type
// link-homotopy invariant of 6-component links.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "linkhom/certificate.hpp"
#include "linkhom/invariant.hpp"

using namespace linkhom;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<TranslationVector> verification_vectors() {
  std::vector<TranslationVector> vecs = all_partial_conj_vectors(6);
  std::vector<TranslationVector> conj = all_conj_vectors(6);
  vecs.insert(vecs.end(), conj.begin(), conj.end());
  vecs.push_back(reversal_vector(6));
  return vecs;
}

void print_stats_table(const OmegaCertificate& cert) {
  std::size_t total = 0;
  std::printf("%4s %8s %8s %8s\n", "i", "terms", "degree", "content");
  for (std::size_t c = 0; c < cert.stats.size(); ++c) {
    const CoordStats& st = cert.stats[c];
    std::printf("%4zu %8zu %8d %8s\n", c + 1, st.term_count, st.degree,
                st.content.str().c_str());
    total += st.term_count;
  }
  std::printf("total monomials %zu\n", total);
}

int cmd_build_omega(const std::string& out_path, const std::string& algorithm, Exec exec) {
  auto start = std::chrono::steady_clock::now();
  DetAlgorithm alg =
      algorithm == "bareiss" ? DetAlgorithm::bareiss : DetAlgorithm::laplace_memo;
  OmegaCertificate cert = cofactor_perp(build_omega_matrix(), exec, alg);
  PerpReport perp = verify_perp(cert, verification_vectors());
  if (!perp.all_zero()) {
    for (const PerpCheck& c : perp.checks)
      if (!c.zero) std::cerr << "orthogonality FAILED for " << c.label << "\n";
    return 1;
  }
  write_certificate_file(cert, out_path);
  print_stats_table(cert);
  std::printf("orthogonality verified against %zu vectors\n", perp.checks.size());
  std::printf("wrote %s (%.2f s)\n", out_path.c_str(), seconds_since(start));
  return 0;
}

int cmd_verify_omega(const std::string& cert_path) {
  OmegaCertificate cert = read_certificate_file(cert_path);
  std::string rendered = render_certificate(cert);
  OmegaCertificate reparsed = parse_certificate(rendered);
  if (render_certificate(reparsed) != rendered) {
    std::cerr << "FAIL round-trip: re-rendering changed the certificate bytes\n";
    return 1;
  }
  std::printf("round-trip: byte-identical\n");
  PerpReport perp = verify_perp(cert, verification_vectors());
  int failures = 0;
  for (const PerpCheck& c : perp.checks) {
    if (!c.zero) {
      ++failures;
      std::printf("FAIL orthogonality %s\n", c.label.c_str());
    }
  }
  std::printf("orthogonality: %zu/%zu vectors annihilated\n",
              perp.checks.size() - static_cast<size_t>(failures), perp.checks.size());
  return failures == 0 ? 0 : 1;
}

int cmd_invariant(const std::string& cert_path, const std::string& word,
                  const std::string& mu_file, Exec exec) {
  OmegaCertificate cert = read_certificate_file(cert_path);
  LinkData link = !word.empty() ? link_from_word(parse_word(word, cert.k), exec)
                                : read_link_data_file(mu_file, cert.k);
  std::cout << invariant_value(cert, link).str() << "\n";
  return 0;
}

int cmd_trials(const std::string& cert_path, const TrialOptions& opt, bool reversal_only,
               Exec exec) {
  OmegaCertificate cert = read_certificate_file(cert_path);
  TrialReport report = reversal_only ? reversal_trials(cert, opt, exec)
                                     : homotopy_trials(cert, opt, exec);
  for (const std::string& f : report.failures) std::printf("FAIL %s\n", f.c_str());
  std::printf("trials %d seed %llu failures %zu\n", report.trials,
              static_cast<unsigned long long>(opt.seed), report.failures.size());
  return report.ok() ? 0 : 1;
}

int cmd_rank(int k, const std::string& rows, const RankOptions& opt, Exec exec) {
  PolyMatrix m;
  if (rows == "all") {
    if (k < 3 || k > 9) throw CLI::ValidationError("rank", "--rows all needs --k in 3..9");
    m = PolyMatrix::from_vectors(all_partial_conj_vectors(k));
  } else if (rows == "paper18" || rows == "paper18R") {
    if (k != 6) throw CLI::ValidationError("rank", "--rows " + rows + " needs --k 6");
    std::vector<TranslationVector> vecs;
    for (auto [i, j] : omega_row_selection()) vecs.push_back(partial_conj_vector(6, i, j));
    if (rows == "paper18R") vecs.push_back(reversal_vector(6));
    m = PolyMatrix::from_vectors(vecs);
  } else {
    throw CLI::ValidationError("rank", "--rows must be all, paper18 or paper18R");
  }
  int r = generic_rank(m, opt, exec);
  std::printf("rank %d\n", r);
  std::printf("binom(k,3) %d\n", triple_count(k));
  std::printf("k^2-3k %d\n", k * k - 3 * k);
  return 0;
}

int cmd_relations(int k) {
  RelationReport report = relation_check(k);
  for (const IdentityCheck& c : report.identities)
    std::printf("%s %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str());
  std::printf("%zu identities checked\n", report.identities.size());
  return report.all_passed() ? 0 : 1;
}

int cmd_mu(int k, const std::string& word, Exec exec) {
  LinkData data = link_from_word(parse_word(word, k), exec);
  for (const auto& [pair, value] : data.l)
    std::printf("l %d %d %s\n", pair.i, pair.j, value.str().c_str());
  for (int rank = 0; rank < triple_count(k); ++rank) {
    TripleIndex tri = triple_unrank(k, rank);
    std::printf("mu %d %d %d %s\n", tri.r, tri.s, tri.t,
                data.mu[static_cast<size_t>(rank)].str().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact link-homotopy invariant toolkit for 6-component links"};
  app.require_subcommand(1);
  bool serial = false;
  app.add_flag("--serial", serial, "use the serial reference kernels");

  auto* build = app.add_subcommand("build-omega", "build the perpendicular vector certificate");
  std::string out_path, algorithm = "laplace";
  build->add_option("--out", out_path, "output certificate path")->required();
  build->add_option("--algorithm", algorithm, "determinant algorithm")
      ->check(CLI::IsMember({"laplace", "bareiss"}));

  auto* verify = app.add_subcommand("verify-omega", "re-verify a certificate file");
  std::string cert_path;
  verify->add_option("--cert", cert_path, "certificate path")->required();

  auto* inv = app.add_subcommand("invariant", "evaluate the invariant on a link");
  std::string inv_cert, inv_word, inv_mu_file;
  inv->add_option("--cert", inv_cert, "certificate path")->required();
  auto* word_opt = inv->add_option("--word", inv_word, "pure-braid word, e.g. \"t1,3 t2,3^-1\"");
  auto* mu_opt = inv->add_option("--mu-file", inv_mu_file, "explicit link data file");
  word_opt->excludes(mu_opt);

  TrialOptions trial_opt;
  auto* homotopy = app.add_subcommand("homotopy-test", "random-walk invariance trials");
  std::string hom_cert;
  homotopy->add_option("--cert", hom_cert, "certificate path")->required();
  homotopy->add_option("--trials", trial_opt.trials, "number of trials");
  homotopy->add_option("--seed", trial_opt.seed, "RNG seed")->required();
  homotopy->add_option("--l-range", trial_opt.l_range, "linking numbers drawn from [-R,R]");
  homotopy->add_option("--max-seq-len", trial_opt.max_seq_len, "moves per trial");

  auto* reversal = app.add_subcommand("reversal-test", "orientation-reversal sign trials");
  std::string rev_cert;
  int rev_trials = 1000;
  uint64_t rev_seed = 0;
  reversal->add_option("--cert", rev_cert, "certificate path")->required();
  reversal->add_option("--trials", rev_trials, "number of trials");
  reversal->add_option("--seed", rev_seed, "RNG seed")->required();

  auto* rank = app.add_subcommand("rank", "generic rank of translation-vector matrices");
  int rank_k = 6;
  std::string rank_rows = "all";
  RankOptions rank_opt;
  rank->add_option("--k", rank_k, "strand count")->required();
  rank->add_option("--rows", rank_rows, "row selection: all, paper18, paper18R");
  rank->add_option("--trials", rank_opt.trials, "evaluation trials");
  rank->add_option("--prime", rank_opt.prime, "prime modulus (>= 2^20)");
  rank->add_option("--seed", rank_opt.seed, "RNG seed")->required();

  auto* relations = app.add_subcommand("relations", "verify the translation-vector relations");
  int rel_k = 6;
  relations->add_option("--k", rel_k, "strand count")->required()->check(CLI::Range(3, 9));

  auto* mu = app.add_subcommand("mu", "linking numbers and mu-vector of a braid word");
  int mu_k = 6;
  std::string mu_word;
  mu->add_option("--k", mu_k, "strand count")->required()->check(CLI::Range(3, 9));
  mu->add_option("--word", mu_word, "pure-braid word")->required();

  CLI11_PARSE(app, argc, argv);
  Exec exec = serial ? Exec::serial : Exec::parallel;

  try {
    if (build->parsed()) return cmd_build_omega(out_path, algorithm, exec);
    if (verify->parsed()) return cmd_verify_omega(cert_path);
    if (inv->parsed()) {
      if (inv_word.empty() && inv_mu_file.empty())
        throw CLI::ValidationError("invariant", "need --word or --mu-file");
      return cmd_invariant(inv_cert, inv_word, inv_mu_file, exec);
    }
    if (homotopy->parsed()) return cmd_trials(hom_cert, trial_opt, false, exec);
    if (reversal->parsed()) {
      TrialOptions opt;
      opt.trials = rev_trials;
      opt.seed = rev_seed;
      return cmd_trials(rev_cert, opt, true, exec);
    }
    if (rank->parsed()) return cmd_rank(rank_k, rank_rows, rank_opt, exec);
    if (relations->parsed()) return cmd_relations(rel_k);
    if (mu->parsed()) return cmd_mu(mu_k, mu_word, exec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
