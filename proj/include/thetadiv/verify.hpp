#pragma once

// Randomized identity sweeps behind `thetadiv verify`.
//
// Weight vectors are drawn as d_i = -10 + (x mod 21) from a std::mt19937_64
// stream seeded with the user seed, for i < n; the last weight is then set
// so the vector has the required degree. Mueller sweeps redraw until some
// weight is negative. Results depend only on (g, n, trials, seed).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "thetadiv/solver.hpp"
#include "thetadiv/theta_classes.hpp"

namespace thetadiv {

enum class VerifyKind { Rank, T, Theta, Mueller };

VerifyKind parse_verify_kind(const std::string& name);
std::string verify_kind_name(VerifyKind kind);

/// One draw as documented above. Throws std::invalid_argument when
/// require_negative cannot be met (n = 1 with a non-negative degree).
WeightVector random_weights(std::mt19937_64& rng, int n, std::int64_t degree, bool require_negative = false);

struct VerifyFailure {
    WeightVector d;
    std::string detail;
};

struct VerifyReport {
    VerifyKind kind = VerifyKind::Rank;
    int g = 0;
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int passed = 0;
    PlusConvention convention = PlusConvention::NonNegative;
    std::vector<VerifyFailure> failures;
    RankReport rank;  ///< filled for VerifyKind::Rank

    bool ok() const { return failures.empty() && passed == trials; }
};

VerifyReport run_verification(VerifyKind kind, int g, int n, int trials, std::uint64_t seed,
                              PlusConvention convention = PlusConvention::NonNegative);

}  // namespace thetadiv
