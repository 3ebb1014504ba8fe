#pragma once

// Generators of the rational Picard group of the moduli space of stable
// n-pointed genus-g curves: lambda_1, delta_irr, K_1..K_n and one boundary
// class delta_h^P per divisor, stored through a canonical representative.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace thetadiv {

/// Largest number of marked points supported (subset enumeration is 2^n).
inline constexpr int kMaxMarkings = 20;

/// Subset of the marking labels {1..n}.
class MarkSet {
public:
    constexpr MarkSet() = default;
    static constexpr MarkSet from_bits(std::uint32_t bits) {
        MarkSet s;
        s.bits_ = bits;
        return s;
    }
    static MarkSet of(std::initializer_list<int> points);
    static MarkSet of(std::span<const int> points);
    static constexpr MarkSet all(int n) { return from_bits(n <= 0 ? 0u : ((1u << n) - 1u)); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool contains(int i) const { return i >= 1 && i <= 32 && ((bits_ >> (i - 1)) & 1u) != 0; }
    int size() const;
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool subset_of(MarkSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr MarkSet complement(int n) const { return from_bits(all(n).bits_ & ~bits_); }
    MarkSet with(int i) const;
    std::vector<int> elements() const;
    /// "{1,2}"; the empty set is "{}".
    std::string str() const;

    friend constexpr bool operator==(MarkSet a, MarkSet b) { return a.bits_ == b.bits_; }
    /// Lexicographic on the sorted element lists.
    friend std::strong_ordering operator<=>(MarkSet a, MarkSet b);

private:
    std::uint32_t bits_ = 0;
};

/// A representative (h, P) of the boundary divisor delta_h^P = delta_{g-h}^{P^c}.
struct BoundaryIndex {
    int h = 0;
    MarkSet P;

    friend bool operator==(const BoundaryIndex&, const BoundaryIndex&) = default;
    /// Basis order: by h, then |P|, then lexicographic P.
    friend std::strong_ordering operator<=>(const BoundaryIndex& a, const BoundaryIndex& b);
};

/// True iff both components of the generic curve of (h, P) are stable.
bool is_stable_boundary(int h, MarkSet P, int g, int n);

/// The other representative (g-h, P^c).
BoundaryIndex mirror(const BoundaryIndex& b, int g, int n);

/// Canonical representative: h <= g-h, and on a tie h = g/2 the side
/// containing marking 1. Throws std::invalid_argument for out-of-range or
/// unstable input.
BoundaryIndex canonicalize_boundary(int h, MarkSet P, int g, int n);
inline BoundaryIndex canonicalize_boundary(const BoundaryIndex& b, int g, int n) {
    return canonicalize_boundary(b.h, b.P, g, n);
}

/// Every boundary class exactly once, canonical form, in basis order.
std::vector<BoundaryIndex> enumerate_boundary(int g, int n);

class DivGenerator {
public:
    enum class Kind { Lambda1, DeltaIrr, K, Delta };

    static DivGenerator lambda1() { return DivGenerator(Kind::Lambda1, 0, {}); }
    static DivGenerator delta_irr() { return DivGenerator(Kind::DeltaIrr, 0, {}); }
    static DivGenerator k(int i) { return DivGenerator(Kind::K, i, {}); }
    /// The payload should be canonical; Basis::index_of canonicalizes anyway.
    static DivGenerator delta(BoundaryIndex b) { return DivGenerator(Kind::Delta, 0, b); }

    /// Inverse of label(); throws std::invalid_argument on unknown text.
    static DivGenerator parse(const std::string& label);

    Kind kind() const { return kind_; }
    int index() const { return index_; }
    const BoundaryIndex& boundary() const { return boundary_; }

    /// "lambda1", "delta_irr", "K3", "delta_1^{1,2}".
    std::string label() const;

    friend bool operator==(const DivGenerator&, const DivGenerator&) = default;
    friend std::strong_ordering operator<=>(const DivGenerator&, const DivGenerator&) = default;

private:
    DivGenerator(Kind kind, int index, BoundaryIndex b) : kind_(kind), index_(index), boundary_(b) {}

    Kind kind_;
    int index_;
    BoundaryIndex boundary_;
};

/// Ordered basis (lambda1, delta_irr, K_1..K_n, boundary classes).
class Basis {
public:
    /// g >= 1, 1 <= n <= kMaxMarkings.
    static std::shared_ptr<const Basis> make(int g, int n);

    int genus() const { return g_; }
    int markings() const { return n_; }
    std::size_t size() const { return generators_.size(); }
    std::span<const DivGenerator> generators() const { return generators_; }
    std::span<const BoundaryIndex> boundary() const { return boundary_; }
    const DivGenerator& operator[](std::size_t i) const { return generators_[i]; }

    static constexpr std::size_t lambda1_index() { return 0; }
    static constexpr std::size_t delta_irr_index() { return 1; }
    std::size_t k_index(int i) const;
    std::size_t delta_index(const BoundaryIndex& b) const;
    std::size_t index_of(const DivGenerator& gen) const;

private:
    Basis(int g, int n);

    int g_;
    int n_;
    std::vector<BoundaryIndex> boundary_;
    std::vector<DivGenerator> generators_;
    std::map<BoundaryIndex, std::size_t> delta_lookup_;
};

/// A relabeling of markings; perm[i-1] is the image of marking i.
using Permutation = std::vector<int>;

void validate_permutation(const Permutation& perm, int n);
MarkSet permute(const Permutation& perm, MarkSet P);
BoundaryIndex permute(const Permutation& perm, const BoundaryIndex& b, int g, int n);
DivGenerator permute(const Permutation& perm, const DivGenerator& gen, int g, int n);
/// All permutations of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace thetadiv
