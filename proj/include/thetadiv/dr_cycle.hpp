#pragma once

// Formal degree-g expansion of the double ramification cycle
// (1/g!) [s_d^* T]^g on compact type. No relations of the Chow ring are
// imposed: monomials are multisets of divisor generators.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "thetadiv/divisor_class.hpp"
#include "thetadiv/theta_classes.hpp"

namespace thetadiv {

inline constexpr std::uint64_t kDefaultMonomialCap = 1'000'000;

/// Environment variable overriding the monomial cap.
inline constexpr const char* kMonomialCapEnv = "THETADIV_MONOMIAL_CAP";

/// Product of generators with positive exponents, keyed by basis index and
/// sorted by it.
class FormalMonomial {
public:
    FormalMonomial() = default;
    explicit FormalMonomial(std::vector<std::pair<std::size_t, int>> factors);

    std::span<const std::pair<std::size_t, int>> factors() const { return factors_; }
    int degree() const;

    friend bool operator==(const FormalMonomial&, const FormalMonomial&) = default;
    friend auto operator<=>(const FormalMonomial&, const FormalMonomial&) = default;

private:
    std::vector<std::pair<std::size_t, int>> factors_;
};

class FormalCycle {
public:
    FormalCycle(std::shared_ptr<const Basis> basis, int degree);

    int genus() const { return basis_->genus(); }
    int markings() const { return basis_->markings(); }
    int degree() const { return degree_; }
    const Basis& basis() const { return *basis_; }
    const std::shared_ptr<const Basis>& shared_basis() const { return basis_; }
    const std::map<FormalMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c to a monomial of the cycle's degree; zero sums are dropped.
    void add(const FormalMonomial& m, const Rational& c);

    friend bool operator==(const FormalCycle& a, const FormalCycle& b);

private:
    std::shared_ptr<const Basis> basis_;
    int degree_;
    std::map<FormalMonomial, Rational> terms_;
};

/// Cap from THETADIV_MONOMIAL_CAP if set and valid, else the default.
std::uint64_t monomial_cap_from_env();

/// Same as DivisorClass::restricted_to_compact_type.
DivisorClass restrict_to_compact_type(const DivisorClass& cls);

/// (1/exponent!) * cls^exponent expanded formally. Throws std::length_error
/// when C(k + e - 1, e) exceeds the cap, k = number of nonzero coefficients.
FormalCycle formal_power(const DivisorClass& cls, int exponent, std::uint64_t cap);

/// (1/g!) (class_T restricted to compact type)^g; deg d = 0.
FormalCycle dr_expansion(int g, int n, const WeightVector& d, std::uint64_t cap = monomial_cap_from_env());

/// Exact evaluation; every generator occurring in a term must be assigned.
Rational evaluate(const FormalCycle& cycle, const std::map<DivGenerator, Rational>& assignment);

FormalCycle permute(const Permutation& perm, const FormalCycle& cycle);

}  // namespace thetadiv
