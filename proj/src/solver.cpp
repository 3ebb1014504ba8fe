#include "thetadiv/solver.hpp"

#include <utility>

#include "thetadiv/test_curves.hpp"

namespace thetadiv {

namespace {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

// Clears denominators row by row; returns the integer rows and the factor
// each row was multiplied by.
std::pair<IntegerMatrix, std::vector<mpz_class>> to_integer_rows(const RationalMatrix& rows) {
    IntegerMatrix out;
    std::vector<mpz_class> scales;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        mpz_class l = 1;
        for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
        std::vector<mpz_class> ints;
        ints.reserve(row.size());
        for (const auto& x : row) ints.push_back(x.value().get_num() * (l / x.value().get_den()));
        out.push_back(std::move(ints));
        scales.push_back(l);
    }
    return {std::move(out), std::move(scales)};
}

struct Bareiss {
    IntegerMatrix a;
    std::vector<std::size_t> order;  // order[r] = original index of row r
    std::vector<std::size_t> pivot_cols;
    std::size_t first_missing_col = static_cast<std::size_t>(-1);
    int swaps = 0;
};

// Fraction-free elimination over the first `cols` columns; any further
// columns (an augmented rhs) are carried along.
Bareiss run_bareiss(IntegerMatrix a, std::size_t cols) {
    Bareiss out;
    const std::size_t m = a.size();
    const std::size_t width = m == 0 ? 0 : a[0].size();
    out.order.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.order[i] = i;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t k = 0; k < cols && r < m; ++k) {
        std::size_t p = r;
        while (p < m && a[p][k] == 0) ++p;
        if (p == m) {
            if (out.first_missing_col == static_cast<std::size_t>(-1)) out.first_missing_col = k;
            continue;
        }
        if (p != r) {
            std::swap(a[p], a[r]);
            std::swap(out.order[p], out.order[r]);
            ++out.swaps;
        }
        const mpz_class& piv = a[r][k];
        for (std::size_t i = r + 1; i < m; ++i) {
            const mpz_class lead = a[i][k];
            for (std::size_t j = k + 1; j < width; ++j) {
                mpz_class v = piv * a[i][j] - lead * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][k] = 0;
        }
        prev = a[r][k];
        out.pivot_cols.push_back(k);
        ++r;
    }
    out.a = std::move(a);
    return out;
}

std::string label_or_index(const std::vector<std::string>& labels, std::size_t i) {
    return i < labels.size() ? labels[i] : "#" + std::to_string(i);
}

DivisorClass class_from_solution(int g, int n, const std::vector<Rational>& x) {
    DivisorClass out(Basis::make(g, n));
    const auto& basis = out.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) out.set(basis[i], x[i]);
    return out;
}

void require_solver_range(int g) {
    if (g < 3) throw std::invalid_argument("test-curve reconstruction needs g >= 3");
}

std::vector<TestCurve> system_curves(int g, int n, bool with_elliptic, ReconstructOptions options) {
    std::vector<TestCurve> curves;
    for (const auto& c : enumerate_test_curves(g, n)) {
        const bool elliptic = c.kind() == TestCurve::Kind::E || c.kind() == TestCurve::Kind::Zirr;
        if (!elliptic || with_elliptic) curves.push_back(c);
    }
    if (options.mirror_rows) {
        for (const auto& b : enumerate_boundary(g, n)) {
            if (b.h > 0) curves.push_back(TestCurve::z(mirror(b, g, n)));
        }
    }
    return curves;
}

void append_curve_rows(LinearSystem& sys, const std::vector<TestCurve>& curves, int g, int n, const WeightVector& d,
                       ThetaKind kind) {
    const auto basis = Basis::make(g, n);
    for (const auto& c : curves) {
        std::vector<Rational> row;
        row.reserve(basis->size());
        for (const auto& gen : basis->generators()) row.push_back(intersect(c, gen, g, n));
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(*theta_intersection(c, g, n, d, kind));
        sys.row_labels.push_back(c.label());
    }
}

LinearSystem empty_system(int g, int n) {
    LinearSystem sys;
    const auto basis = Basis::make(g, n);
    for (const auto& gen : basis->generators()) sys.col_labels.push_back(gen.label());
    return sys;
}

}  // namespace

std::vector<Rational> solve_exact(const LinearSystem& system) {
    const std::size_t m = system.matrix.size();
    const std::size_t cols = system.col_labels.empty() ? (m == 0 ? 0 : system.matrix[0].size()) : system.col_labels.size();
    if (system.rhs.size() != m) throw std::invalid_argument("rhs length does not match the row count");
    if (!system.row_labels.empty() && system.row_labels.size() != m)
        throw std::invalid_argument("row label count does not match the row count");
    if (m < cols) throw std::invalid_argument("underdetermined system");
    RationalMatrix augmented;
    augmented.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (system.matrix[i].size() != cols) throw std::invalid_argument("ragged matrix");
        auto row = system.matrix[i];
        row.push_back(system.rhs[i]);
        augmented.push_back(std::move(row));
    }
    auto [ints, scales] = to_integer_rows(augmented);
    const Bareiss e = run_bareiss(std::move(ints), cols);
    if (e.pivot_cols.size() < cols) {
        const std::size_t k = e.first_missing_col;
        const std::size_t at = e.pivot_cols.size();
        throw SingularSystemError(label_or_index(system.row_labels, at < m ? e.order[at] : m - 1),
                                  label_or_index(system.col_labels, k));
    }
    for (std::size_t r = cols; r < m; ++r) {
        if (e.a[r][cols] != 0) throw InconsistentSystemError(label_or_index(system.row_labels, e.order[r]));
    }
    std::vector<Rational> x(cols);
    for (std::size_t k = cols; k-- > 0;) {
        Rational acc(mpq_class(e.a[k][cols]));
        for (std::size_t j = k + 1; j < cols; ++j) acc -= Rational(mpq_class(e.a[k][j])) * x[j];
        x[k] = acc / Rational(mpq_class(e.a[k][k]));
    }
    return x;
}

EliminationSummary eliminate(const RationalMatrix& matrix) {
    const std::size_t m = matrix.size();
    const std::size_t cols = m == 0 ? 0 : matrix[0].size();
    for (const auto& row : matrix) {
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    }
    auto [ints, scales] = to_integer_rows(matrix);
    const Bareiss e = run_bareiss(std::move(ints), cols);
    EliminationSummary out;
    out.rank = e.pivot_cols.size();
    for (std::size_t r = out.rank; r < m; ++r) out.dependent_rows.push_back(e.order[r]);
    if (m == cols && out.rank == cols && m > 0) {
        // det(scaled rows) = (-1)^swaps * last Bareiss pivot.
        mpq_class det(e.a[m - 1][m - 1]);
        if (e.swaps % 2 != 0) det = -det;
        for (const auto& s : scales) det /= s;
        out.determinant = Rational(det);
    }
    return out;
}

RankReport certify_basis(int g, int n) {
    const IntersectionMatrix m = build_matrix(g, n);
    const EliminationSummary e = eliminate(m.entries);
    RankReport report;
    report.g = g;
    report.n = n;
    report.rank = e.rank;
    report.expected = static_cast<std::size_t>(n) + enumerate_boundary(g, n).size() + 2;
    report.det_nonzero = !e.determinant.is_zero();
    report.determinant = e.determinant;
    for (auto i : e.dependent_rows) report.failed_rows.push_back(m.rows[i].label());
    return report;
}

LinearSystem t_system(int g, int n, const WeightVector& d, ReconstructOptions options) {
    require_solver_range(g);
    LinearSystem sys = empty_system(g, n);
    append_curve_rows(sys, system_curves(g, n, true, options), g, n, d, ThetaKind::T);
    return sys;
}

LinearSystem theta_system(int g, int n, const WeightVector& d, ReconstructOptions options) {
    require_solver_range(g);
    LinearSystem sys = empty_system(g, n);
    append_curve_rows(sys, system_curves(g, n, false, options), g, n, d, ThetaKind::Theta);
    const std::size_t width = sys.col_labels.size();
    std::vector<Rational> lambda_row(width);
    lambda_row[Basis::lambda1_index()] = 1;
    sys.matrix.push_back(lambda_row);
    sys.rhs.push_back(-1);
    sys.row_labels.emplace_back("lambda1=-1");
    // E . [D_d] = 0 after removing the vanishing along delta_1^{} and delta_irr.
    std::vector<Rational> elliptic_row(width);
    elliptic_row[Basis::lambda1_index()] = 1;
    elliptic_row[Basis::delta_irr_index()] = 12;
    sys.matrix.push_back(std::move(elliptic_row));
    sys.rhs.push_back(Rational(1, 2));
    sys.row_labels.emplace_back("lambda1+12*delta_irr=1/2");
    return sys;
}

DivisorClass reconstruct_T(int g, int n, const WeightVector& d, ReconstructOptions options) {
    return class_from_solution(g, n, solve_exact(t_system(g, n, d, options)));
}

DivisorClass reconstruct_Theta(int g, int n, const WeightVector& d, ReconstructOptions options) {
    return class_from_solution(g, n, solve_exact(theta_system(g, n, d, options)));
}

}  // namespace thetadiv
