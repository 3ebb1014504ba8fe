#pragma once

#include <map>
#include <memory>
#include <span>
#include <vector>

#include "thetadiv/basis.hpp"
#include "thetadiv/rational.hpp"

namespace thetadiv {

/// Exact coefficient vector over an ordered Basis.
///
/// In the K frame the K_i slots hold coefficients of K_i; in the Psi frame
/// the same slots hold coefficients of psi_i. A compact-type class has no
/// delta_irr component (its slot stays zero and is not serialized).
class DivisorClass {
public:
    enum class Frame { K, Psi };

    explicit DivisorClass(std::shared_ptr<const Basis> basis, Frame frame = Frame::K);
    static DivisorClass zero(int g, int n) { return DivisorClass(Basis::make(g, n)); }

    int genus() const { return basis_->genus(); }
    int markings() const { return basis_->markings(); }
    const Basis& basis() const { return *basis_; }
    const std::shared_ptr<const Basis>& shared_basis() const { return basis_; }
    Frame frame() const { return frame_; }
    bool compact_type() const { return compact_type_; }

    std::span<const Rational> coefficients() const { return coeffs_; }
    const Rational& coeff(const DivGenerator& gen) const { return coeffs_[basis_->index_of(gen)]; }
    const Rational& coeff_at(std::size_t index) const { return coeffs_.at(index); }
    const Rational& lambda1() const { return coeffs_[Basis::lambda1_index()]; }
    const Rational& delta_irr() const { return coeffs_[Basis::delta_irr_index()]; }
    const Rational& k(int i) const { return coeffs_[basis_->k_index(i)]; }
    /// Accepts either representative of the boundary class.
    const Rational& delta(const BoundaryIndex& b) const { return coeffs_[basis_->delta_index(b)]; }

    /// Adds c to the coefficient of gen (boundary payload is canonicalized).
    DivisorClass& add(const DivGenerator& gen, const Rational& c);
    DivisorClass& set(const DivGenerator& gen, const Rational& c);

    bool is_zero() const;

    /// Drops the delta_irr generator; idempotent.
    DivisorClass restricted_to_compact_type() const;

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& c, DivisorClass a);

    /// Exact comparison; classes over different (g, n), frames or ambient
    /// spaces are never equal.
    friend bool operator==(const DivisorClass& a, const DivisorClass& b);

private:
    void check_compatible(const DivisorClass& o) const;

    std::shared_ptr<const Basis> basis_;
    Frame frame_;
    bool compact_type_ = false;
    std::vector<Rational> coeffs_;
};

/// Free-function forms of the class arithmetic.
inline DivisorClass add(const DivisorClass& a, const DivisorClass& b) { return a + b; }
inline DivisorClass scale(const Rational& c, const DivisorClass& a) { return c * a; }
inline bool equals(const DivisorClass& a, const DivisorClass& b) { return a == b; }

/// psi_i = K_i + sum over P containing i, |P| >= 2, of delta_0^P, in the K frame.
DivisorClass psi_in_k_basis(int i, int g, int n);

/// Rewrites a K-frame class in the Psi frame by substituting
/// K_i = psi_i - sum delta_0^P.
DivisorClass to_psi_frame(const DivisorClass& cls);
/// Inverse of to_psi_frame, substituting psi_in_k_basis for each psi_i.
DivisorClass to_k_frame(const DivisorClass& cls);

/// Relabels markings: K_i -> K_{perm(i)}, delta_h^P -> delta_h^{perm(P)}.
DivisorClass permute(const Permutation& perm, const DivisorClass& cls);

/// Linear evaluation sum c_j * value(gen_j); every generator with a nonzero
/// coefficient must be assigned (throws std::invalid_argument otherwise).
Rational evaluate(const DivisorClass& cls, const std::map<DivGenerator, Rational>& assignment);

}  // namespace thetadiv
