// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce identical results.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "linkhom/braid.hpp"
#include "linkhom/invariant.hpp"
#include "linkhom/omega.hpp"

using namespace linkhom;

namespace {

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto start = std::chrono::steady_clock::now();
    fn();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (dt < best) best = dt;
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool match) {
  std::printf("%-28s %10.3f s %10.3f s %8.2fx   %s\n", name, serial, parallel,
              serial / parallel, match ? "results match" : "MISMATCH");
}

BraidWord random_word(int k, int len, uint64_t seed) {
  std::mt19937_64 rng(seed);
  BraidWord w;
  w.k = k;
  for (int n = 0; n < len; ++n) {
    int i = 1 + static_cast<int>(rng() % static_cast<uint64_t>(k));
    int j = 1 + static_cast<int>(rng() % static_cast<uint64_t>(k - 1));
    if (j >= i) ++j;
    w.letters.push_back({PairVar(i, j), rng() % 2 ? 1 : -1});
  }
  return w;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel path falls back to one thread\n");
#endif
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    PolyMatrix m = build_omega_matrix();
    OmegaCertificate serial_cert, parallel_cert;
    double ts = time_best_of(1, [&] { serial_cert = cofactor_perp(m, Exec::serial); });
    double tp = time_best_of(3, [&] { parallel_cert = cofactor_perp(m, Exec::parallel); });
    report("cofactor_perp 19x20", ts, tp, serial_cert.omega == parallel_cert.omega);

    TrialOptions opt;
    opt.trials = 200;
    opt.seed = 42;
    TrialReport rs, rp;
    ts = time_best_of(1, [&] { rs = homotopy_trials(serial_cert, opt, Exec::serial); });
    tp = time_best_of(1, [&] { rp = homotopy_trials(serial_cert, opt, Exec::parallel); });
    report("homotopy_trials x200", ts, tp, rs.ok() && rp.ok());
  }

  {
    BraidWord w = random_word(6, 200000, 7);
    LinkData ds, dp;
    double ts = time_best_of(3, [&] { ds = mu_all(w, Exec::serial); });
    double tp = time_best_of(3, [&] { dp = mu_all(w, Exec::parallel); });
    report("mu_all len 200000", ts, tp, ds.mu == dp.mu && ds.l == dp.l);
  }

  {
    PolyMatrix m = PolyMatrix::from_vectors(all_partial_conj_vectors(6));
    RankOptions opt;
    opt.trials = 512;
    opt.seed = 9;
    int rs = 0, rp = 0;
    double ts = time_best_of(3, [&] { rs = generic_rank(m, opt, Exec::serial); });
    double tp = time_best_of(3, [&] { rp = generic_rank(m, opt, Exec::parallel); });
    report("generic_rank x512", ts, tp, rs == rp);
  }

  return 0;
}
