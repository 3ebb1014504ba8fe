#include "thetadiv/theta_classes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace thetadiv {

namespace {

void require_weights(int g, int n, const WeightVector& d, std::int64_t degree, const char* what) {
    if (g < 1) throw std::invalid_argument(std::string(what) + ": needs g >= 1");
    if (d.size() != n)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n) + " weights, got " +
                                    std::to_string(d.size()));
    if (d.degree() != Rational(degree))
        throw std::invalid_argument(std::string(what) + ": weights must have degree " + std::to_string(degree) +
                                    ", got " + d.degree().str());
}

void require_mueller_weights(int g, int n, const WeightVector& d, const char* what) {
    require_weights(g, n, d, g - 1, what);
    if (!d.has_negative()) throw std::invalid_argument(std::string(what) + ": needs at least one negative weight");
}

// -(d_P^2 - sum_{i in P} d_i^2) / 2, shared by every formula on h = 0 classes.
Rational rational_tail_coefficient(const WeightVector& d, MarkSet P) {
    const Rational dp = d.partial_sum(P);
    return -(dp * dp - d.partial_square_sum(P)) / 2;
}

Rational theta_boundary_coefficient(const WeightVector& d, const BoundaryIndex& b) {
    const Rational x = d.partial_sum(b.P) - b.h;
    return -(x * (x + 1)) / 2;
}

}  // namespace

Rational WeightVector::degree() const {
    Rational s;
    for (auto v : d_) s += v;
    return s;
}

Rational WeightVector::partial_sum(MarkSet P) const {
    Rational s;
    for (int i : P.elements()) s += (*this)[i];
    return s;
}

Rational WeightVector::partial_square_sum(MarkSet P) const {
    Rational s;
    for (int i : P.elements()) s += Rational((*this)[i]) * (*this)[i];
    return s;
}

bool WeightVector::has_negative() const {
    return std::any_of(d_.begin(), d_.end(), [](std::int64_t v) { return v < 0; });
}

WeightVector permute(const Permutation& perm, const WeightVector& d) {
    validate_permutation(perm, d.size());
    std::vector<std::int64_t> out(static_cast<std::size_t>(d.size()));
    for (int i = 1; i <= d.size(); ++i) out[static_cast<std::size_t>(perm[static_cast<std::size_t>(i - 1)] - 1)] = d[i];
    return WeightVector(std::move(out));
}

MarkSet plus_set(const WeightVector& d, PlusConvention convention) {
    std::vector<int> points;
    for (int i = 1; i <= d.size(); ++i) {
        const bool in = convention == PlusConvention::NonNegative ? d[i] >= 0 : d[i] > 0;
        if (in) points.push_back(i);
    }
    return MarkSet::of(points);
}

DivisorClass class_T(int g, int n, const WeightVector& d) {
    require_weights(g, n, d, 0, "class_T");
    DivisorClass out(Basis::make(g, n));
    for (int i = 1; i <= n; ++i) out.set(DivGenerator::k(i), Rational(d[i]) * d[i] / 2);
    for (const auto& b : out.basis().boundary()) {
        const Rational dp = d.partial_sum(b.P);
        out.set(DivGenerator::delta(b), b.h == 0 ? rational_tail_coefficient(d, b.P) : -(dp * dp) / 2);
    }
    return out;
}

DivisorClass class_Theta(int g, int n, const WeightVector& d) {
    require_weights(g, n, d, g - 1, "class_Theta");
    DivisorClass out(Basis::make(g, n));
    out.set(DivGenerator::lambda1(), -1);
    out.set(DivGenerator::delta_irr(), Rational(1, 8));
    for (int i = 1; i <= n; ++i) out.set(DivGenerator::k(i), Rational(d[i]) * (d[i] + 1) / 2);
    for (const auto& b : out.basis().boundary()) {
        out.set(DivGenerator::delta(b), b.h == 0 ? rational_tail_coefficient(d, b.P) : theta_boundary_coefficient(d, b));
    }
    return out;
}

CorrectionLedger correction_ledger(int g, int n, const WeightVector& d, PlusConvention convention) {
    require_mueller_weights(g, n, d, "correction_ledger");
    const MarkSet plus = plus_set(d, convention);
    CorrectionLedger ledger;
    for (const auto& b : enumerate_boundary(g, n)) {
        std::optional<CorrectionTerm> found;
        for (const auto& rep : {b, mirror(b, g, n)}) {
            const Rational dp = d.partial_sum(rep.P);
            if (!rep.P.subset_of(plus) || !(Rational(rep.h) > dp)) continue;
            // Unreachable with a negative weight: it lies on one of the two sides.
            if (found) throw std::logic_error("both sides of " + DivGenerator::delta(b).label() + " qualify");
            found = CorrectionTerm{rep, Rational(rep.h) - dp};
        }
        if (found) ledger.terms.push_back(*found);
    }
    return ledger;
}

DivisorClass class_D_from_theta(int g, int n, const WeightVector& d, PlusConvention convention) {
    DivisorClass out = class_Theta(g, n, d);
    for (const auto& term : correction_ledger(g, n, d, convention).terms) {
        out.add(DivGenerator::delta(term.representative), -term.multiplicity);
    }
    out.add(DivGenerator::delta_irr(), -Rational(1, 8));
    return out;
}

DivisorClass class_D_direct(int g, int n, const WeightVector& d, PlusConvention convention) {
    require_mueller_weights(g, n, d, "class_D_direct");
    DivisorClass out(Basis::make(g, n));
    out.add(DivGenerator::lambda1(), -1);
    for (int i = 1; i <= n; ++i) out.add(DivGenerator::k(i), Rational(d[i]) * (d[i] + 1) / 2);
    for (const auto& b : out.basis().boundary()) {
        const Rational dp = d.partial_sum(b.P);
        if (b.h == 0) {
            out.add(DivGenerator::delta(b), -(dp * dp - d.partial_square_sum(b.P)) / 2);
        } else {
            out.add(DivGenerator::delta(b), -((dp - b.h) * (dp - b.h + 1)) / 2);
        }
    }
    // Scan every stable representative (h, P), 0 <= h <= g.
    const MarkSet plus = plus_set(d, convention);
    for (int h = 0; h <= g; ++h) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            const auto P = MarkSet::from_bits(bits);
            if (!is_stable_boundary(h, P, g, n) || !P.subset_of(plus)) continue;
            const Rational dp = d.partial_sum(P);
            if (Rational(h) > dp) out.add(DivGenerator::delta({h, P}), -(Rational(h) - dp));
        }
    }
    return out;
}

std::optional<Rational> theta_intersection(const TestCurve& curve, int g, int n, const WeightVector& d,
                                           ThetaKind kind) {
    validate_curve(curve, g, n);
    require_weights(g, n, d, kind == ThetaKind::T ? 0 : g - 1, "theta_intersection");
    switch (curve.kind()) {
        case TestCurve::Kind::Zi: {
            const Rational di = d[curve.index()];
            return di * di * g;
        }
        case TestCurve::Kind::ZhP: {
            const auto& b = curve.boundary();
            Rational x = d.partial_sum(b.P);
            if (kind == ThetaKind::Theta) x -= b.h;
            return x * x * (g - b.h);
        }
        case TestCurve::Kind::E:
        case TestCurve::Kind::Zirr:
            if (kind == ThetaKind::T) return Rational(0);
            return std::nullopt;
    }
    throw std::logic_error("unreachable curve kind");
}

Rational pair(const TestCurve& curve, const DivisorClass& cls) {
    if (cls.frame() != DivisorClass::Frame::K) throw std::invalid_argument("pairing needs a K-frame class");
    const auto& basis = cls.basis();
    Rational total;
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const auto& c = cls.coeff_at(idx);
        if (!c.is_zero()) total += c * intersect(curve, basis[idx], cls.genus(), cls.markings());
    }
    return total;
}

}  // namespace thetadiv
