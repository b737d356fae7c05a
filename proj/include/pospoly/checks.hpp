#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pospoly/poset.hpp"
#include "pospoly/rng.hpp"

namespace pospoly {

struct CheckResult {
    std::string id;
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0.0;
};

struct CheckConfig {
    std::uint64_t seed = 0;
    bool acceptance = true;  // the A* suite
    bool properties = true;  // the P* suite
};

/// Runs the requested suites and returns one result per check. Never throws;
/// a check that raises is reported as failed with the message in `details`.
std::vector<CheckResult> run_checks(const CheckConfig& config);

/// Convenience builders shared by the suites and the tests.
Poset chain_poset(int n);
Poset antichain_poset(int n);
Poset grid2x2_poset();

/// Random poset: size 1..max_size, relation density drawn from a few tiers
/// (including none, giving antichains), then transitively closed.
Poset random_poset(Rng& rng, int max_size);

}  // namespace pospoly
