#ifndef FPDEA_LP_HPP
#define FPDEA_LP_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include "fpdea/errors.hpp"

namespace fpdea {

// Numerical tolerances shared by every estimator in this library.
// kPivotTol: entries below this are treated as zero in pivot selection.
// kFeasTol: feasibility/optimality tolerance of the solver.
// kEqualTol: tolerance for reported equalities (duality gaps, score
// comparisons across algebraic routes).
inline constexpr double kPivotTol = 1e-9;
inline constexpr double kFeasTol = 1e-7;
inline constexpr double kEqualTol = 1e-6;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class ObjectiveSense { Maximize, Minimize };
enum class ConstraintSense { LessEqual, Equal, GreaterEqual };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/// A dense linear program
///
///   optimize   c'x
///   subject to A x  {<=,=,>=}  b   (sense per row)
///              lb <= x <= ub       (defaults 0 and +infinity)
///
/// The constraint matrix is stored row-major in `coefficients`.
struct LinearProgram {
    LinearProgram() = default;
    LinearProgram(std::size_t num_variables, ObjectiveSense s)
        : sense(s),
          objective(num_variables, 0.0),
          lower_bounds(num_variables, 0.0),
          upper_bounds(num_variables, kInfinity),
          n_vars_(num_variables) {}

    ObjectiveSense sense = ObjectiveSense::Minimize;
    std::vector<double> objective;
    std::vector<double> coefficients;  // row-major, n_rows x n_vars
    std::vector<ConstraintSense> row_senses;
    std::vector<double> rhs;
    std::vector<double> lower_bounds;
    std::vector<double> upper_bounds;

    std::size_t num_vars() const { return n_vars_; }
    std::size_t num_rows() const { return rhs.size(); }

    double& at(std::size_t row, std::size_t var) {
        return coefficients[row * n_vars_ + var];
    }
    double at(std::size_t row, std::size_t var) const {
        return coefficients[row * n_vars_ + var];
    }

    /// Appends a row of zeros and returns its index.
    std::size_t add_row(ConstraintSense s, double right_hand_side) {
        coefficients.resize(coefficients.size() + n_vars_, 0.0);
        row_senses.push_back(s);
        rhs.push_back(right_hand_side);
        return rhs.size() - 1;
    }

  private:
    std::size_t n_vars_ = 0;
};

/// Result of a solve. `primal` and `objective_value` are meaningful only
/// for Optimal; `duals` (one multiplier per constraint row, signed so that
/// b'duals equals the objective for default-bound programs) is populated
/// only for Optimal.
struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    double objective_value = 0.0;
    std::vector<double> primal;
    std::vector<double> duals;
};

/// Two-phase primal simplex with Bland's rule. Throws MalformedProgram on
/// dimension mismatches or non-finite coefficients; otherwise always
/// returns a status-tagged solution. Deterministic: identical inputs give
/// bit-identical outputs.
LpSolution solve(const LinearProgram& lp);

}  // namespace fpdea

#endif
