#include "thetadiv/verify.hpp"

#include <stdexcept>

namespace thetadiv {

namespace {

constexpr int kMaxRedraws = 10'000;

std::string first_difference(const DivisorClass& got, const DivisorClass& want) {
    const auto& basis = got.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (got.coeff_at(i) != want.coeff_at(i)) {
            return basis[i].label() + ": " + got.coeff_at(i).str() + " != " + want.coeff_at(i).str();
        }
    }
    return "classes differ";
}

}  // namespace

VerifyKind parse_verify_kind(const std::string& name) {
    if (name == "rank") return VerifyKind::Rank;
    if (name == "T") return VerifyKind::T;
    if (name == "theta") return VerifyKind::Theta;
    if (name == "mueller") return VerifyKind::Mueller;
    throw std::invalid_argument("unknown verification: " + name);
}

std::string verify_kind_name(VerifyKind kind) {
    switch (kind) {
        case VerifyKind::Rank: return "rank";
        case VerifyKind::T: return "T";
        case VerifyKind::Theta: return "theta";
        case VerifyKind::Mueller: return "mueller";
    }
    return {};
}

WeightVector random_weights(std::mt19937_64& rng, int n, std::int64_t degree, bool require_negative) {
    if (n < 1) throw std::invalid_argument("need at least one marking");
    if (require_negative && n == 1 && degree >= 0)
        throw std::invalid_argument("no weight vector of length 1 and degree " + std::to_string(degree) +
                                    " has a negative entry");
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        std::vector<std::int64_t> d(static_cast<std::size_t>(n));
        std::int64_t sum = 0;
        for (int i = 0; i + 1 < n; ++i) {
            d[static_cast<std::size_t>(i)] = -10 + static_cast<std::int64_t>(rng() % 21);
            sum += d[static_cast<std::size_t>(i)];
        }
        d.back() = degree - sum;
        WeightVector w(std::move(d));
        if (!require_negative || w.has_negative()) return w;
    }
    throw std::runtime_error("could not draw a weight vector with a negative entry");
}

VerifyReport run_verification(VerifyKind kind, int g, int n, int trials, std::uint64_t seed,
                              PlusConvention convention) {
    if (g < 3) throw std::invalid_argument("verification sweeps need g >= 3");
    if (trials < 0) throw std::invalid_argument("trials must be non-negative");
    VerifyReport report;
    report.kind = kind;
    report.g = g;
    report.n = n;
    report.seed = seed;
    report.convention = convention;

    if (kind == VerifyKind::Rank) {
        report.trials = 1;
        report.rank = certify_basis(g, n);
        if (report.rank.passed()) {
            report.passed = 1;
        } else {
            report.failures.push_back({{}, "rank " + std::to_string(report.rank.rank) + " of " +
                                               std::to_string(report.rank.expected)});
        }
        return report;
    }

    report.trials = trials;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        WeightVector d;
        switch (kind) {
            case VerifyKind::T: d = random_weights(rng, n, 0); break;
            case VerifyKind::Theta: d = random_weights(rng, n, g - 1); break;
            default: d = random_weights(rng, n, g - 1, true); break;
        }
        DivisorClass got(Basis::make(g, n));
        DivisorClass want(Basis::make(g, n));
        try {
            switch (kind) {
                case VerifyKind::T:
                    got = reconstruct_T(g, n, d);
                    want = class_T(g, n, d);
                    break;
                case VerifyKind::Theta:
                    got = reconstruct_Theta(g, n, d);
                    want = class_Theta(g, n, d);
                    break;
                default:
                    got = class_D_direct(g, n, d, convention);
                    want = class_D_from_theta(g, n, d, convention);
                    break;
            }
        } catch (const std::runtime_error& e) {
            report.failures.push_back({d, e.what()});
            continue;
        }
        if (got == want) {
            ++report.passed;
        } else {
            report.failures.push_back({d, first_difference(got, want)});
        }
    }
    return report;
}

}  // namespace thetadiv
