#pragma once

// Closed-form classes of the pulled-back theta divisors T (degree 0) and
// Theta (degree g-1), the divisor D_d of pointed curves with
// h^0(sum d_i p_i) >= 1, and the theta-side test-curve intersection numbers.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "thetadiv/basis.hpp"
#include "thetadiv/divisor_class.hpp"
#include "thetadiv/rational.hpp"
#include "thetadiv/test_curves.hpp"

namespace thetadiv {

/// Integer weights d_1..d_n at the marked points.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<std::int64_t> d) : d_(std::move(d)) {}
    WeightVector(std::initializer_list<std::int64_t> d) : d_(d) {}

    int size() const { return static_cast<int>(d_.size()); }
    std::int64_t operator[](int i) const { return d_.at(static_cast<std::size_t>(i - 1)); }  // 1-based
    std::span<const std::int64_t> values() const { return d_; }

    Rational degree() const;
    /// d_P = sum over i in P of d_i.
    Rational partial_sum(MarkSet P) const;
    /// sum over i in P of d_i^2.
    Rational partial_square_sum(MarkSet P) const;
    bool has_negative() const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<std::int64_t> d_;
};

/// (sigma . d)_{sigma(i)} = d_i.
WeightVector permute(const Permutation& perm, const WeightVector& d);

/// Which markings count as "non-negative" when deciding boundary corrections.
enum class PlusConvention {
    NonNegative,  ///< P_+ = {i : d_i >= 0}
    Strict,       ///< P_+ = {i : d_i > 0}
};

MarkSet plus_set(const WeightVector& d, PlusConvention convention);

struct CorrectionTerm {
    BoundaryIndex representative;  ///< the qualifying (h, P), not canonicalized
    Rational multiplicity;         ///< h - d_P
};

struct CorrectionLedger {
    std::vector<CorrectionTerm> terms;  ///< in basis order of the class
    Rational delta_irr_order{1, 8};
};

/// [s_d^* T]; requires deg d = 0.
DivisorClass class_T(int g, int n, const WeightVector& d);
/// [s_d^* Theta]; requires deg d = g-1.
DivisorClass class_Theta(int g, int n, const WeightVector& d);

/// Boundary components along which the pulled-back theta function vanishes
/// identically, with vanishing orders h - d_P. Requires deg d = g-1 and some
/// d_i < 0.
CorrectionLedger correction_ledger(int g, int n, const WeightVector& d,
                                   PlusConvention convention = PlusConvention::NonNegative);

/// [D_d] as [s_d^* Theta] minus the ledger terms and delta_irr / 8.
DivisorClass class_D_from_theta(int g, int n, const WeightVector& d,
                                PlusConvention convention = PlusConvention::NonNegative);
/// [D_d] evaluated term by term from its own closed form.
DivisorClass class_D_direct(int g, int n, const WeightVector& d,
                            PlusConvention convention = PlusConvention::NonNegative);

enum class ThetaKind { T, Theta };

/// Test curve . [s_d^* T] or [s_d^* Theta]. Returns nullopt for E and Z_irr
/// against Theta, which have no closed form here.
std::optional<Rational> theta_intersection(const TestCurve& curve, int g, int n, const WeightVector& d,
                                           ThetaKind kind);

/// Pairs a class against a test curve through the intersection table.
Rational pair(const TestCurve& curve, const DivisorClass& cls);

}  // namespace thetadiv
