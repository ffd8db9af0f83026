#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkhom/braid.hpp"
#include "linkhom/certificate.hpp"
#include "linkhom/omega.hpp"

namespace linkhom {

/// The invariant: sum over triples of mu[t] * omega[t](l). Requires the
/// link data and the certificate to share the strand count.
Int invariant_value(const OmegaCertificate& cert, const LinkData& link);

/// Link data from a braid word (linking numbers plus mu-vector).
LinkData link_from_word(const BraidWord& w, Exec exec = Exec::serial);

/// Link data from explicit text: lines `l i j value` and `mu r s t value`
/// (r < s < t required), blank lines and `#` comments ignored, missing
/// entries zero.
LinkData parse_link_data(const std::string& text, int k);
LinkData read_link_data_file(const std::string& path, int k);

struct TrialOptions {
  int trials = 1000;
  uint64_t seed = 0;
  int l_range = 9;       // linking numbers drawn from [-l_range, l_range]
  int mu_range = 9;      // mu entries drawn from [-mu_range, mu_range]
  int max_seq_len = 12;  // partial-conjugation moves per trial
};

struct TrialReport {
  int trials = 0;
  std::vector<std::string> failures;  // empty on success
  bool ok() const { return failures.empty(); }
};

/// Random-walk invariance check: each trial draws (l, mu) and a random
/// sequence of partial conjugations, asserts the invariant is constant
/// along the walk, then appends a full reversal and asserts the value
/// flips sign exactly. Trials are independent and reproducible from the
/// seed, so the parallel path distributes them across threads.
TrialReport homotopy_trials(const OmegaCertificate& cert, const TrialOptions& opt,
                            Exec exec = Exec::serial);

/// Dedicated reversal check: invariant(apply_reversal(mu)) == -invariant(mu).
TrialReport reversal_trials(const OmegaCertificate& cert, const TrialOptions& opt,
                            Exec exec = Exec::serial);

}  // namespace linkhom
