#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmat/report.hpp"

namespace pmat {

// Shared knobs for the verification drivers. Unset optionals mean "the
// per-target default range". `primes` overrides the built-in prime or
// prime-power list of targets that iterate over one.
struct VerifyOptions {
    std::optional<long long> max_n;
    std::optional<long long> max_q;
    std::optional<long long> max_k;
    std::vector<long long> primes;
    int jobs = 1;
};

struct VerifyResult {
    std::vector<CheckReport> reports;
    // A failed check backed by a proved statement. Conjecture and
    // record-only checks never set this.
    bool theorem_failure = false;
};

VerifyResult verify_target(const std::string& target, const VerifyOptions& opts);

const std::vector<std::string>& verify_target_names();

} // namespace pmat
