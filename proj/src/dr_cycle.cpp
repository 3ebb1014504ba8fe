#include "thetadiv/dr_cycle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace thetadiv {

namespace {

mpz_class factorial(int k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

mpz_class multiset_count(std::size_t k, int e) {
    if (k == 0) return e == 0 ? 1 : 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k + static_cast<std::size_t>(e) - 1),
                 static_cast<unsigned long>(e));
    return c;
}

// Walks all exponent vectors (e_1..e_k) with sum e in lexicographic order,
// accumulating prod c_j^{e_j} / e_j!.
void expand(const std::vector<std::size_t>& gens, const std::vector<Rational>& coeffs, std::size_t pos, int remaining,
            std::vector<std::pair<std::size_t, int>>& factors, const Rational& acc, FormalCycle& out) {
    if (pos + 1 == gens.size()) {
        Rational c = acc * pow(coeffs[pos], remaining) / Rational(mpq_class(factorial(remaining)));
        if (remaining > 0) factors.emplace_back(gens[pos], remaining);
        out.add(FormalMonomial(factors), c);
        if (remaining > 0) factors.pop_back();
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        const Rational next = acc * pow(coeffs[pos], e) / Rational(mpq_class(factorial(e)));
        if (e > 0) factors.emplace_back(gens[pos], e);
        expand(gens, coeffs, pos + 1, remaining - e, factors, next, out);
        if (e > 0) factors.pop_back();
    }
}

}  // namespace

FormalMonomial::FormalMonomial(std::vector<std::pair<std::size_t, int>> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    std::vector<std::pair<std::size_t, int>> merged;
    for (const auto& [idx, e] : factors_) {
        if (e < 0) throw std::invalid_argument("negative exponent in monomial");
        if (e == 0) continue;
        if (!merged.empty() && merged.back().first == idx) {
            merged.back().second += e;
        } else {
            merged.emplace_back(idx, e);
        }
    }
    factors_ = std::move(merged);
}

int FormalMonomial::degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

FormalCycle::FormalCycle(std::shared_ptr<const Basis> basis, int degree) : basis_(std::move(basis)), degree_(degree) {
    if (!basis_) throw std::invalid_argument("null basis");
    if (degree_ < 0) throw std::invalid_argument("negative cycle degree");
}

void FormalCycle::add(const FormalMonomial& m, const Rational& c) {
    if (m.degree() != degree_) throw std::invalid_argument("monomial degree does not match the cycle");
    for (const auto& f : m.factors()) {
        if (f.first >= basis_->size()) throw std::invalid_argument("monomial generator outside the basis");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool operator==(const FormalCycle& a, const FormalCycle& b) {
    return a.genus() == b.genus() && a.markings() == b.markings() && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::uint64_t monomial_cap_from_env() {
    const char* raw = std::getenv(kMonomialCapEnv);
    if (raw == nullptr || *raw == '\0') return kDefaultMonomialCap;
    std::uint64_t v = 0;
    const auto* end = raw + std::strlen(raw);
    const auto [ptr, ec] = std::from_chars(raw, end, v);
    if (ec != std::errc() || ptr != end) return kDefaultMonomialCap;
    return v;
}

DivisorClass restrict_to_compact_type(const DivisorClass& cls) { return cls.restricted_to_compact_type(); }

FormalCycle formal_power(const DivisorClass& cls, int exponent, std::uint64_t cap) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    if (cls.frame() != DivisorClass::Frame::K) throw std::invalid_argument("formal power needs a K-frame class");
    std::vector<std::size_t> gens;
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < cls.basis().size(); ++i) {
        if (!cls.coeff_at(i).is_zero()) {
            gens.push_back(i);
            coeffs.push_back(cls.coeff_at(i));
        }
    }
    FormalCycle out(cls.shared_basis(), exponent);
    const mpz_class count = multiset_count(gens.size(), exponent);
    if (count > mpz_class(std::to_string(cap)))
        throw std::length_error("expansion would have " + count.get_str() + " monomials, above the cap of " +
                                std::to_string(cap) + " (set " + kMonomialCapEnv + " to raise it)");
    if (gens.empty()) {
        if (exponent == 0) out.add(FormalMonomial{}, 1);
        return out;
    }
    std::vector<std::pair<std::size_t, int>> factors;
    expand(gens, coeffs, 0, exponent, factors, Rational(1), out);
    return out;
}

FormalCycle dr_expansion(int g, int n, const WeightVector& d, std::uint64_t cap) {
    return formal_power(restrict_to_compact_type(class_T(g, n, d)), g, cap);
}

Rational evaluate(const FormalCycle& cycle, const std::map<DivGenerator, Rational>& assignment) {
    Rational total;
    for (const auto& [m, c] : cycle.terms()) {
        Rational term = c;
        for (const auto& [idx, e] : m.factors()) {
            const auto& gen = cycle.basis()[idx];
            const auto it = assignment.find(gen);
            if (it == assignment.end()) throw std::invalid_argument("no value assigned to " + gen.label());
            term *= pow(it->second, e);
        }
        total += term;
    }
    return total;
}

FormalCycle permute(const Permutation& perm, const FormalCycle& cycle) {
    const int g = cycle.genus();
    const int n = cycle.markings();
    validate_permutation(perm, n);
    const auto& basis = cycle.basis();
    FormalCycle out(cycle.shared_basis(), cycle.degree());
    for (const auto& [m, c] : cycle.terms()) {
        std::vector<std::pair<std::size_t, int>> factors;
        for (const auto& [idx, e] : m.factors()) factors.emplace_back(basis.index_of(permute(perm, basis[idx], g, n)), e);
        out.add(FormalMonomial(std::move(factors)), c);
    }
    return out;
}

}  // namespace thetadiv
