#include <doctest.h>

#include <cstdlib>
#include <random>
#include <stdexcept>

#include "thetadiv/dr_cycle.hpp"

using namespace thetadiv;

namespace {

Rational factorial(int k) {
    Rational out(1);
    for (int i = 2; i <= k; ++i) out *= Rational(i);
    return out;
}

std::map<DivGenerator, Rational> constant(const Basis& basis, const Rational& v) {
    std::map<DivGenerator, Rational> out;
    for (const auto& gen : basis.generators()) out.emplace(gen, v);
    return out;
}

std::map<DivGenerator, Rational> random_assignment(const Basis& basis, std::mt19937_64& rng) {
    std::map<DivGenerator, Rational> out;
    for (const auto& gen : basis.generators()) {
        out.emplace(gen, Rational(static_cast<std::int64_t>(rng() % 19) - 9, static_cast<std::int64_t>(rng() % 7) + 1));
    }
    return out;
}

// Sets an environment variable for the lifetime of the guard.
struct EnvGuard {
    EnvGuard(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
    ~EnvGuard() { ::unsetenv(name_); }
    const char* name_;
};

}  // namespace

TEST_CASE("zero weights give the zero cycle") {
    CHECK(dr_expansion(3, 2, {0, 0}).is_zero());
    CHECK(dr_expansion(4, 1, {0}).is_zero());
}

TEST_CASE("genus one expansion is the class itself") {
    const auto cls = restrict_to_compact_type(class_T(1, 2, {2, -2}));
    const auto cyc = dr_expansion(1, 2, {2, -2});
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < cls.basis().size(); ++i) {
        if (cls.coeff_at(i).is_zero()) continue;
        ++nonzero;
        CHECK(cyc.terms().at(FormalMonomial({{i, 1}})) == cls.coeff_at(i));
    }
    CHECK(cyc.terms().size() == nonzero);
}

TEST_CASE("all-ones evaluation at (g=3, d=(1,-1)) is 1/6") {
    const auto cyc = dr_expansion(3, 2, {1, -1});
    CHECK(evaluate(cyc, constant(cyc.basis(), Rational(1))) == Rational(1, 6));
    CHECK(evaluate(cyc, constant(cyc.basis(), Rational(0))).is_zero());
    for (const auto& [m, c] : cyc.terms()) CHECK(m.degree() == 3);
}

TEST_CASE("single generator power") {
    auto x = DivisorClass::zero(3, 1).restricted_to_compact_type();
    x.add(DivGenerator::k(1), Rational(2, 3));
    const auto cyc = formal_power(x, 3, kDefaultMonomialCap);
    REQUIRE(cyc.terms().size() == 1);
    CHECK(cyc.terms().begin()->second == pow(Rational(2, 3), 3) / Rational(6));
}

TEST_CASE("multinomial identity on random assignments") {
    std::mt19937_64 rng(123);
    for (int g = 3; g <= 5; ++g) {
        for (int n = 1; n <= 3; ++n) {
            std::vector<std::int64_t> raw(static_cast<std::size_t>(n));
            std::int64_t s = 0;
            for (int i = 0; i + 1 < n; ++i) {
                raw[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rng() % 7) - 3;
                s += raw[static_cast<std::size_t>(i)];
            }
            raw.back() = -s;
            const WeightVector d(raw);
            const auto cls = restrict_to_compact_type(class_T(g, n, d));
            const auto cyc = dr_expansion(g, n, d);
            for (int t = 0; t < 20; ++t) {
                const auto a = random_assignment(cyc.basis(), rng);
                CHECK(evaluate(cyc, a) == pow(evaluate(cls, a), g) / factorial(g));
            }
        }
    }
}

TEST_CASE("monomial cap") {
    CHECK_THROWS_AS(dr_expansion(5, 3, {2, 1, -3}, 10), std::length_error);
    CHECK_NOTHROW(dr_expansion(3, 2, {1, -1}, 35));
    CHECK_THROWS_AS(dr_expansion(3, 2, {1, -1}, 34), std::length_error);
    {
        const EnvGuard env(kMonomialCapEnv, "5");
        CHECK(monomial_cap_from_env() == 5);
        CHECK_THROWS_AS(dr_expansion(3, 2, {1, -1}), std::length_error);
    }
    {
        const EnvGuard env(kMonomialCapEnv, "junk");
        CHECK(monomial_cap_from_env() == kDefaultMonomialCap);
    }
    CHECK(monomial_cap_from_env() == kDefaultMonomialCap);
}

TEST_CASE("evaluation needs every generator that occurs") {
    const auto cyc = dr_expansion(3, 2, {1, -1});
    auto a = constant(cyc.basis(), Rational(1));
    a.erase(DivGenerator::k(1));
    CHECK_THROWS_AS(evaluate(cyc, a), std::invalid_argument);
}

TEST_CASE("compact type restriction") {
    const auto th = class_Theta(3, 2, {3, -1});
    const auto r = restrict_to_compact_type(th);
    CHECK(r.compact_type());
    CHECK(restrict_to_compact_type(r) == r);
    CHECK(r.k(1) == th.k(1));
    CHECK(r.lambda1() == th.lambda1());
    const auto t = class_T(3, 2, {1, -1});
    CHECK(restrict_to_compact_type(t).delta(BoundaryIndex{0, MarkSet::of({1, 2})}) == Rational(1));
}

TEST_CASE("expansion is permutation equivariant") {
    const WeightVector d{2, -1, -1};
    const auto cyc = dr_expansion(3, 3, d);
    for (const auto& perm : all_permutations(3)) CHECK(dr_expansion(3, 3, permute(perm, d)) == permute(perm, cyc));
}
