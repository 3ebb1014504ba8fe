#include "thetadiv/divisor_class.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace thetadiv {

DivisorClass::DivisorClass(std::shared_ptr<const Basis> basis, Frame frame)
    : basis_(std::move(basis)), frame_(frame) {
    if (!basis_) throw std::invalid_argument("null basis");
    coeffs_.assign(basis_->size(), Rational(0));
}

DivisorClass& DivisorClass::add(const DivGenerator& gen, const Rational& c) {
    const auto idx = basis_->index_of(gen);
    if (compact_type_ && idx == Basis::delta_irr_index() && !c.is_zero())
        throw std::invalid_argument("delta_irr is not a generator on compact type");
    coeffs_[idx] += c;
    return *this;
}

DivisorClass& DivisorClass::set(const DivGenerator& gen, const Rational& c) {
    const auto idx = basis_->index_of(gen);
    if (compact_type_ && idx == Basis::delta_irr_index() && !c.is_zero())
        throw std::invalid_argument("delta_irr is not a generator on compact type");
    coeffs_[idx] = c;
    return *this;
}

bool DivisorClass::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

DivisorClass DivisorClass::restricted_to_compact_type() const {
    DivisorClass out = *this;
    out.coeffs_[Basis::delta_irr_index()] = Rational(0);
    out.compact_type_ = true;
    return out;
}

void DivisorClass::check_compatible(const DivisorClass& o) const {
    if (genus() != o.genus() || markings() != o.markings())
        throw std::invalid_argument("divisor classes over different (g, n)");
    if (frame_ != o.frame_) throw std::invalid_argument("divisor classes in different frames");
    if (compact_type_ != o.compact_type_)
        throw std::invalid_argument("mixing compact-type and full divisor classes");
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

DivisorClass operator*(const Rational& c, DivisorClass a) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.genus() == b.genus() && a.markings() == b.markings() && a.frame_ == b.frame_ &&
           a.compact_type_ == b.compact_type_ && a.coeffs_ == b.coeffs_;
}

DivisorClass psi_in_k_basis(int i, int g, int n) {
    DivisorClass out(Basis::make(g, n));
    out.add(DivGenerator::k(i), 1);
    for (const auto& b : out.basis().boundary()) {
        if (b.h == 0 && b.P.contains(i)) out.add(DivGenerator::delta(b), 1);
    }
    return out;
}

DivisorClass to_psi_frame(const DivisorClass& cls) {
    if (cls.frame() != DivisorClass::Frame::K) throw std::invalid_argument("class is not in the K frame");
    // psi-frame coefficient of delta_0^P picks up -sum_{i in P} c(K_i).
    DivisorClass out(cls.shared_basis(), DivisorClass::Frame::Psi);
    if (cls.compact_type()) out = out.restricted_to_compact_type();
    const auto& basis = cls.basis();
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const auto& gen = basis[idx];
        Rational c = cls.coeff_at(idx);
        if (gen.kind() == DivGenerator::Kind::Delta && gen.boundary().h == 0) {
            for (int i : gen.boundary().P.elements()) c -= cls.k(i);
        }
        out.set(gen, c);
    }
    return out;
}

DivisorClass to_k_frame(const DivisorClass& cls) {
    if (cls.frame() != DivisorClass::Frame::Psi) throw std::invalid_argument("class is not in the psi frame");
    const int g = cls.genus();
    const int n = cls.markings();
    DivisorClass out(cls.shared_basis());
    if (cls.compact_type()) out = out.restricted_to_compact_type();
    const auto& basis = cls.basis();
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const auto& gen = basis[idx];
        if (gen.kind() != DivGenerator::Kind::K) out.add(gen, cls.coeff_at(idx));
    }
    for (int i = 1; i <= n; ++i) {
        DivisorClass psi = psi_in_k_basis(i, g, n);
        if (cls.compact_type()) psi = psi.restricted_to_compact_type();
        out += cls.k(i) * psi;
    }
    return out;
}

DivisorClass permute(const Permutation& perm, const DivisorClass& cls) {
    const int g = cls.genus();
    const int n = cls.markings();
    validate_permutation(perm, n);
    DivisorClass out(cls.shared_basis(), cls.frame());
    if (cls.compact_type()) out = out.restricted_to_compact_type();
    const auto& basis = cls.basis();
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        out.add(permute(perm, basis[idx], g, n), cls.coeff_at(idx));
    }
    return out;
}

Rational evaluate(const DivisorClass& cls, const std::map<DivGenerator, Rational>& assignment) {
    Rational total;
    const auto& basis = cls.basis();
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const auto& c = cls.coeff_at(idx);
        if (c.is_zero()) continue;
        const auto it = assignment.find(basis[idx]);
        if (it == assignment.end()) throw std::invalid_argument("no value assigned to " + basis[idx].label());
        total += c * it->second;
    }
    return total;
}

}  // namespace thetadiv
