#pragma once

// Exact linear algebra over Q and the test-curve reconstruction of the
// theta pullback classes.

#include <stdexcept>
#include <string>
#include <vector>

#include "thetadiv/divisor_class.hpp"
#include "thetadiv/rational.hpp"
#include "thetadiv/theta_classes.hpp"

namespace thetadiv {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct LinearSystem {
    RationalMatrix matrix;
    std::vector<Rational> rhs;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
};

class SingularSystemError : public std::runtime_error {
public:
    SingularSystemError(std::string row, std::string column)
        : std::runtime_error("singular system: no pivot for column " + column + " (at row " + row + ")"),
          row_label(std::move(row)),
          column_label(std::move(column)) {}
    std::string row_label;
    std::string column_label;
};

class InconsistentSystemError : public std::runtime_error {
public:
    explicit InconsistentSystemError(std::string row)
        : std::runtime_error("inconsistent system at row " + row), row_label(std::move(row)) {}
    std::string row_label;
};

/// Solves a square or overdetermined system exactly by fraction-free
/// (Bareiss) elimination with first-nonzero pivoting. Every row beyond the
/// rank must reduce to 0 = 0.
std::vector<Rational> solve_exact(const LinearSystem& system);

struct EliminationSummary {
    std::size_t rank = 0;
    Rational determinant;                     ///< zero unless square and full rank
    std::vector<std::size_t> dependent_rows;  ///< original indices left without a pivot
};

EliminationSummary eliminate(const RationalMatrix& matrix);

struct RankReport {
    int g = 0;
    int n = 0;
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool det_nonzero = false;
    Rational determinant;
    std::vector<std::string> failed_rows;

    bool passed() const { return rank == expected && det_nonzero && failed_rows.empty(); }
};

/// Rank and determinant of the test-curve intersection matrix; g >= 3.
RankReport certify_basis(int g, int n);

struct ReconstructOptions {
    /// Also add Z_{g-h}^{P^c} for every class with 0 < h; the redundant rows
    /// are checked for consistency.
    bool mirror_rows = false;
};

LinearSystem t_system(int g, int n, const WeightVector& d, ReconstructOptions options = {});
LinearSystem theta_system(int g, int n, const WeightVector& d, ReconstructOptions options = {});

/// Solves the test-curve system for [s_d^* T]; deg d = 0, g >= 3.
DivisorClass reconstruct_T(int g, int n, const WeightVector& d, ReconstructOptions options = {});
/// Solves Z_i / Z_h^P rows plus lambda1 = -1 and lambda1 + 12 delta_irr = 1/2;
/// deg d = g-1, g >= 3.
DivisorClass reconstruct_Theta(int g, int n, const WeightVector& d, ReconstructOptions options = {});

}  // namespace thetadiv
