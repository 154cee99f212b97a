#include "fpdea/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace fpdea {
namespace {

// Dense LU with partial pivoting for the k x k Schur block of the basis
// (k <= number of structural basic variables, tiny for every program this
// library builds). Refactored from scratch each simplex iteration.
class SmallLu {
  public:
    bool factor(std::vector<double> a, std::size_t k) {
        k_ = k;
        a_ = std::move(a);  // row-major k x k
        perm_.resize(k);
        for (std::size_t i = 0; i < k; ++i) perm_[i] = i;
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t piv = col;
            double best = std::fabs(a_[col * k + col]);
            for (std::size_t r = col + 1; r < k; ++r) {
                double v = std::fabs(a_[r * k + col]);
                if (v > best) {
                    best = v;
                    piv = r;
                }
            }
            if (best < 1e-13) return false;
            if (piv != col) {
                for (std::size_t j = 0; j < k; ++j)
                    std::swap(a_[piv * k + j], a_[col * k + j]);
                std::swap(perm_[piv], perm_[col]);
            }
            const double d = a_[col * k + col];
            for (std::size_t r = col + 1; r < k; ++r) {
                const double f = a_[r * k + col] / d;
                a_[r * k + col] = f;
                for (std::size_t j = col + 1; j < k; ++j)
                    a_[r * k + j] -= f * a_[col * k + j];
            }
        }
        return true;
    }

    // Solves A x = b where A is the factored matrix.
    void solve(std::vector<double>& b) const {
        std::vector<double> pb(k_);
        for (std::size_t i = 0; i < k_; ++i) pb[i] = b[perm_[i]];
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j < i; ++j) pb[i] -= a_[i * k_ + j] * pb[j];
        for (std::size_t ii = k_; ii-- > 0;) {
            for (std::size_t j = ii + 1; j < k_; ++j)
                pb[ii] -= a_[ii * k_ + j] * pb[j];
            pb[ii] /= a_[ii * k_ + ii];
        }
        b = std::move(pb);
    }

    // Solves A' x = b.
    void solve_transpose(std::vector<double>& b) const {
        // A = P' L U  =>  A' = U' L' P ; solve U' z = b, L' w = z, x = P' w.
        std::vector<double> z = b;
        for (std::size_t i = 0; i < k_; ++i) {
            for (std::size_t j = 0; j < i; ++j) z[i] -= a_[j * k_ + i] * z[j];
            z[i] /= a_[i * k_ + i];
        }
        for (std::size_t ii = k_; ii-- > 0;)
            for (std::size_t j = ii + 1; j < k_; ++j)
                z[ii] -= a_[j * k_ + ii] * z[j];
        for (std::size_t i = 0; i < k_; ++i) b[perm_[i]] = z[i];
    }

  private:
    std::size_t k_ = 0;
    std::vector<double> a_;
    std::vector<std::size_t> perm_;
};

enum class RowKind { LessEqual, Equal, GreaterEqual };

// How an original variable maps onto the nonnegative internal variables.
struct VarMap {
    enum class Kind { Shifted, Mirrored, Split } kind = Kind::Shifted;
    double offset = 0.0;      // lb for Shifted, ub for Mirrored
    std::size_t col = 0;      // internal column (Shifted/Mirrored, and + part of Split)
    std::size_t neg_col = 0;  // - part of Split
};

// The standard-form program: min c't subject to A t {<=,=,>=} b, t >= 0,
// with b >= 0. Structural columns are stored column-major; slack, surplus
// and artificial columns are implicit (+-e_r).
struct Standard {
    std::size_t m = 0;             // rows, including synthetic bound rows
    std::size_t n = 0;             // structural columns
    std::size_t n_original = 0;    // rows of the caller's program
    std::vector<double> cols;      // n * m, column-major
    std::vector<double> cost;      // n
    std::vector<double> b;         // m, >= 0
    std::vector<RowKind> kind;     // m
    std::vector<int> row_sign;     // m: -1 if the row was negated
    std::vector<VarMap> vmap;      // per original variable
    bool maximize = false;

    double col_at(std::size_t col, std::size_t row) const {
        return cols[col * m + row];
    }
};

void validate(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars();
    const std::size_t m = lp.num_rows();
    if (lp.objective.size() != n || lp.lower_bounds.size() != n ||
        lp.upper_bounds.size() != n)
        throw MalformedProgram("objective/bounds length differs from variable count");
    if (lp.row_senses.size() != m || lp.rhs.size() != m)
        throw MalformedProgram("row sense/rhs length differs from row count");
    if (lp.coefficients.size() != m * n)
        throw MalformedProgram("coefficient matrix is not rows x variables");
    for (double v : lp.objective)
        if (!std::isfinite(v)) throw MalformedProgram("non-finite objective coefficient");
    for (double v : lp.coefficients)
        if (!std::isfinite(v)) throw MalformedProgram("non-finite constraint coefficient");
    for (double v : lp.rhs)
        if (!std::isfinite(v)) throw MalformedProgram("non-finite right-hand side");
    for (std::size_t j = 0; j < n; ++j) {
        const double lo = lp.lower_bounds[j];
        const double hi = lp.upper_bounds[j];
        if (std::isnan(lo) || std::isnan(hi) || lo == kInfinity || hi == -kInfinity)
            throw MalformedProgram("invalid variable bound");
        if (lo > hi) throw MalformedProgram("lower bound exceeds upper bound");
    }
}

Standard to_standard(const LinearProgram& lp) {
    Standard sf;
    sf.maximize = lp.sense == ObjectiveSense::Maximize;
    sf.n_original = lp.num_rows();
    const std::size_t n_orig = lp.num_vars();

    // Pass 1: decide the internal column layout and synthetic bound rows.
    sf.vmap.resize(n_orig);
    std::vector<std::size_t> bound_row_var;  // vars needing t <= ub - lb
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < n_orig; ++j) {
        const double lo = lp.lower_bounds[j];
        const double hi = lp.upper_bounds[j];
        VarMap& vm = sf.vmap[j];
        if (lo == -kInfinity && hi == kInfinity) {
            vm.kind = VarMap::Kind::Split;
            vm.col = ncols++;
            vm.neg_col = ncols++;
        } else if (lo == -kInfinity) {
            vm.kind = VarMap::Kind::Mirrored;
            vm.offset = hi;
            vm.col = ncols++;
        } else {
            vm.kind = VarMap::Kind::Shifted;
            vm.offset = lo;
            vm.col = ncols++;
            if (hi != kInfinity) bound_row_var.push_back(j);
        }
    }
    sf.n = ncols;
    sf.m = lp.num_rows() + bound_row_var.size();
    sf.cols.assign(sf.n * sf.m, 0.0);
    sf.cost.assign(sf.n, 0.0);
    sf.b.assign(sf.m, 0.0);
    sf.kind.assign(sf.m, RowKind::LessEqual);
    sf.row_sign.assign(sf.m, 1);

    const double osign = sf.maximize ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n_orig; ++j) {
        const VarMap& vm = sf.vmap[j];
        const double c = osign * lp.objective[j];
        switch (vm.kind) {
            case VarMap::Kind::Shifted: sf.cost[vm.col] = c; break;
            case VarMap::Kind::Mirrored: sf.cost[vm.col] = -c; break;
            case VarMap::Kind::Split:
                sf.cost[vm.col] = c;
                sf.cost[vm.neg_col] = -c;
                break;
        }
    }

    // Pass 2: fill rows, folding variable offsets into the rhs.
    for (std::size_t i = 0; i < lp.num_rows(); ++i) {
        double rhs = lp.rhs[i];
        for (std::size_t j = 0; j < n_orig; ++j) {
            const double a = lp.at(i, j);
            if (a == 0.0) continue;
            const VarMap& vm = sf.vmap[j];
            switch (vm.kind) {
                case VarMap::Kind::Shifted:
                    sf.cols[vm.col * sf.m + i] = a;
                    rhs -= a * vm.offset;
                    break;
                case VarMap::Kind::Mirrored:
                    sf.cols[vm.col * sf.m + i] = -a;
                    rhs -= a * vm.offset;
                    break;
                case VarMap::Kind::Split:
                    sf.cols[vm.col * sf.m + i] = a;
                    sf.cols[vm.neg_col * sf.m + i] = -a;
                    break;
            }
        }
        sf.b[i] = rhs;
        switch (lp.row_senses[i]) {
            case ConstraintSense::LessEqual: sf.kind[i] = RowKind::LessEqual; break;
            case ConstraintSense::Equal: sf.kind[i] = RowKind::Equal; break;
            case ConstraintSense::GreaterEqual: sf.kind[i] = RowKind::GreaterEqual; break;
        }
    }
    for (std::size_t s = 0; s < bound_row_var.size(); ++s) {
        const std::size_t i = lp.num_rows() + s;
        const VarMap& vm = sf.vmap[bound_row_var[s]];
        sf.cols[vm.col * sf.m + i] = 1.0;
        sf.b[i] = lp.upper_bounds[bound_row_var[s]] - lp.lower_bounds[bound_row_var[s]];
        sf.kind[i] = RowKind::LessEqual;
    }

    // Pass 3: make every rhs nonnegative.
    for (std::size_t i = 0; i < sf.m; ++i) {
        if (sf.b[i] >= 0.0) continue;
        sf.b[i] = -sf.b[i];
        sf.row_sign[i] = -1;
        for (std::size_t c = 0; c < sf.n; ++c) sf.cols[c * sf.m + i] = -sf.cols[c * sf.m + i];
        if (sf.kind[i] == RowKind::LessEqual)
            sf.kind[i] = RowKind::GreaterEqual;
        else if (sf.kind[i] == RowKind::GreaterEqual)
            sf.kind[i] = RowKind::LessEqual;
    }
    return sf;
}

// Variable id layout: [0, n) structural, [n, n+m) slack/surplus of the row,
// [n+m, n+2m) artificial of the row. Bland's rule scans ids ascending;
// artificials never enter.
class Simplex {
  public:
    explicit Simplex(const Standard& sf) : sf_(sf), m_(sf.m), n_(sf.n) {
        unit_sign_.assign(m_, 0);
        basic_var_.assign(m_, 0);
        row_active_.assign(m_, true);
        basic_flag_.assign(n_ + 2 * m_, false);
        for (std::size_t r = 0; r < m_; ++r) {
            switch (sf_.kind[r]) {
                case RowKind::LessEqual:
                    unit_sign_[r] = 1;
                    set_basic(r, n_ + r);
                    break;
                case RowKind::GreaterEqual:
                    unit_sign_[r] = -1;
                    set_basic(r, n_ + m_ + r);
                    break;
                case RowKind::Equal:
                    set_basic(r, n_ + m_ + r);
                    break;
            }
        }
    }

    LpStatus run() {
        // Phase 1: minimize the sum of artificial variables.
        phase1_ = true;
        iterate();
        double art_sum = 0.0;
        for (std::size_t r = 0; r < m_; ++r)
            if (is_artificial(basic_var_[r])) art_sum += std::max(0.0, x_basic_[r]);
        if (art_sum > kFeasTol) return LpStatus::Infeasible;
        expel_artificials();

        phase1_ = false;
        if (!iterate()) return LpStatus::Unbounded;
        return LpStatus::Optimal;
    }

    // Values of the internal structural variables at the final basis.
    std::vector<double> structural_values() const {
        std::vector<double> x(n_, 0.0);
        for (std::size_t r = 0; r < m_; ++r)
            if (row_active_[r] && basic_var_[r] < n_)
                x[basic_var_[r]] = std::max(0.0, x_basic_[r]);
        return x;
    }

    // Duals of the internal rows under the phase-2 objective.
    std::vector<double> row_duals() {
        factor_basis();
        return btran(phase_costs());
    }

  private:
    bool is_artificial(std::size_t id) const { return id >= n_ + m_; }

    // A non-structural variable's column is sign * e_home; slacks and
    // surpluses may be basic at a row other than their home after
    // re-entering the basis.
    std::size_t home_of(std::size_t id) const { return (id - n_) % m_; }

    double sign_of(std::size_t id) const {
        return is_artificial(id) ? 1.0 : static_cast<double>(unit_sign_[home_of(id)]);
    }

    void set_basic(std::size_t row, std::size_t id) {
        basic_flag_[basic_var_[row]] = false;
        basic_var_[row] = id;
        basic_flag_[id] = true;
    }

    double var_cost(std::size_t id) const {
        if (phase1_) return is_artificial(id) ? 1.0 : 0.0;
        return id < n_ ? sf_.cost[id] : 0.0;
    }

    std::vector<double> phase_costs() const {
        std::vector<double> cb(m_, 0.0);
        for (std::size_t r = 0; r < m_; ++r)
            if (row_active_[r]) cb[r] = var_cost(basic_var_[r]);
        return cb;
    }

    // Basis positions with a structural column (drows_), and the active rows
    // not covered by any basic unit column (frows_); the k x k Schur block of
    // the basis is the structural basic columns restricted to frows_.
    void factor_basis() {
        drows_.clear();
        std::vector<bool> covered(m_, false);
        for (std::size_t r = 0; r < m_; ++r) {
            if (!row_active_[r]) continue;
            if (basic_var_[r] < n_)
                drows_.push_back(r);
            else
                covered[home_of(basic_var_[r])] = true;
        }
        frows_.clear();
        for (std::size_t r = 0; r < m_; ++r)
            if (row_active_[r] && !covered[r]) frows_.push_back(r);
        const std::size_t k = drows_.size();
        if (frows_.size() != k) throw Error("lp solver: basis bookkeeping broke");
        std::vector<double> block(k * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                block[i * k + j] = sf_.col_at(basic_var_[drows_[j]], frows_[i]);
        if (!lu_.factor(std::move(block), k))
            throw Error("lp solver: singular basis block");
    }

    // Solves B z = v; z[r] is the value carried by the variable basic at
    // position r.
    std::vector<double> ftran(const std::vector<double>& v) const {
        const std::size_t k = drows_.size();
        std::vector<double> w(k);
        for (std::size_t i = 0; i < k; ++i) w[i] = v[frows_[i]];
        lu_.solve(w);
        std::vector<double> z(m_, 0.0);
        for (std::size_t i = 0; i < k; ++i) z[drows_[i]] = w[i];
        for (std::size_t r = 0; r < m_; ++r) {
            if (!row_active_[r] || basic_var_[r] < n_) continue;
            const std::size_t h = home_of(basic_var_[r]);
            double acc = v[h];
            for (std::size_t i = 0; i < k; ++i)
                acc -= sf_.col_at(basic_var_[drows_[i]], h) * w[i];
            z[r] = acc / sign_of(basic_var_[r]);
        }
        return z;
    }

    // Solves B' y = cb.
    std::vector<double> btran(const std::vector<double>& cb) const {
        const std::size_t k = drows_.size();
        std::vector<double> y(m_, 0.0);
        for (std::size_t r = 0; r < m_; ++r) {
            if (!row_active_[r] || basic_var_[r] < n_) continue;
            y[home_of(basic_var_[r])] = cb[r] / sign_of(basic_var_[r]);
        }
        std::vector<double> rhsk(k);
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t var = basic_var_[drows_[j]];
            double acc = cb[drows_[j]];
            for (std::size_t r = 0; r < m_; ++r) {
                if (!row_active_[r] || basic_var_[r] < n_) continue;
                const std::size_t h = home_of(basic_var_[r]);
                acc -= sf_.col_at(var, h) * y[h];
            }
            rhsk[j] = acc;
        }
        lu_.solve_transpose(rhsk);
        for (std::size_t j = 0; j < k; ++j) y[frows_[j]] = rhsk[j];
        return y;
    }

    double reduced_cost(std::size_t id, const std::vector<double>& y) const {
        double r = var_cost(id);
        if (id < n_) {
            const double* col = sf_.cols.data() + id * m_;
            for (std::size_t i = 0; i < m_; ++i) r -= y[i] * col[i];
        } else if (id < n_ + m_) {
            r -= y[id - n_] * unit_sign_[id - n_];
        } else {
            r -= y[id - n_ - m_];
        }
        return r;
    }

    void refresh_basis_values() {
        factor_basis();
        x_basic_ = ftran(sf_.b);
    }

    // Bland's rule: entering = lowest eligible id, leaving = minimum-ratio
    // row breaking ties by lowest basic id. Returns false when phase 2
    // detects an unbounded ray (never in phase 1).
    bool iterate() {
        const std::size_t max_iter = 10000 + 10 * (m_ + n_);
        for (std::size_t it = 0; it < max_iter; ++it) {
            refresh_basis_values();
            const std::vector<double> y = btran(phase_costs());

            std::size_t enter = kNone;
            for (std::size_t id = 0; id < n_ + m_; ++id) {
                if (basic_flag_[id]) continue;
                if (id >= n_) {
                    const std::size_t r = id - n_;
                    if (unit_sign_[r] == 0 || !row_active_[r]) continue;
                }
                if (reduced_cost(id, y) < -kFeasTol) {
                    enter = id;
                    break;
                }
            }
            if (enter == kNone) return true;

            std::vector<double> col(m_, 0.0);
            if (enter < n_) {
                for (std::size_t i = 0; i < m_; ++i) col[i] = sf_.col_at(enter, i);
            } else {
                col[enter - n_] = unit_sign_[enter - n_];
            }
            const std::vector<double> z = ftran(col);

            std::size_t leave = kNone;
            double best_ratio = 0.0;
            for (std::size_t r = 0; r < m_; ++r) {
                if (!row_active_[r] || z[r] <= kPivotTol) continue;
                const double ratio = std::max(0.0, x_basic_[r]) / z[r];
                if (leave == kNone || ratio < best_ratio ||
                    (ratio == best_ratio && basic_var_[r] < basic_var_[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave == kNone) {
                if (phase1_) throw Error("lp solver: phase 1 ray");
                return false;
            }
            set_basic(leave, enter);
        }
        throw Error("lp solver: iteration limit exceeded");
    }

    // After phase 1, pivot leftover zero-valued artificials out of the
    // basis; rows where no non-artificial column has a usable entry are
    // redundant and get deactivated.
    void expel_artificials() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (!row_active_[r] || !is_artificial(basic_var_[r])) continue;
            factor_basis();
            std::vector<double> e(m_, 0.0);
            e[r] = 1.0;
            const std::vector<double> w = btran(e);  // row r of the basis inverse

            std::size_t best = kNone;
            double best_mag = kPivotTol;
            for (std::size_t id = 0; id < n_ + m_; ++id) {
                if (basic_flag_[id]) continue;
                if (id >= n_ && (unit_sign_[id - n_] == 0 || !row_active_[id - n_])) continue;
                double entry = 0.0;
                if (id < n_) {
                    const double* col = sf_.cols.data() + id * m_;
                    for (std::size_t i = 0; i < m_; ++i) entry += w[i] * col[i];
                } else {
                    entry = w[id - n_] * unit_sign_[id - n_];
                }
                if (std::fabs(entry) > best_mag) {
                    best_mag = std::fabs(entry);
                    best = id;
                }
            }
            if (best == kNone) {
                row_active_[r] = false;
            } else {
                set_basic(r, best);
            }
        }
    }

    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    const Standard& sf_;
    std::size_t m_, n_;
    std::vector<int> unit_sign_;
    std::vector<std::size_t> basic_var_;
    std::vector<bool> row_active_;
    std::vector<bool> basic_flag_;
    std::vector<std::size_t> drows_;
    std::vector<std::size_t> frows_;
    std::vector<double> x_basic_;
    SmallLu lu_;
    bool phase1_ = true;
};

void verify_feasible(const LinearProgram& lp, const std::vector<double>& x) {
    for (std::size_t i = 0; i < lp.num_rows(); ++i) {
        double dot = 0.0;
        double scale = 1.0 + std::fabs(lp.rhs[i]);
        for (std::size_t j = 0; j < lp.num_vars(); ++j) {
            dot += lp.at(i, j) * x[j];
            scale += std::fabs(lp.at(i, j) * x[j]);
        }
        const double resid = dot - lp.rhs[i];
        const bool ok = (lp.row_senses[i] == ConstraintSense::LessEqual && resid <= kFeasTol * scale) ||
                        (lp.row_senses[i] == ConstraintSense::GreaterEqual && resid >= -kFeasTol * scale) ||
                        (lp.row_senses[i] == ConstraintSense::Equal && std::fabs(resid) <= kFeasTol * scale);
        if (!ok) throw Error("lp solver: optimal point violates a constraint");
    }
}

}  // namespace

LpSolution solve(const LinearProgram& lp) {
    validate(lp);
    const Standard sf = to_standard(lp);
    Simplex simplex(sf);

    LpSolution out;
    out.status = simplex.run();
    if (out.status != LpStatus::Optimal) return out;

    const std::vector<double> t = simplex.structural_values();
    out.primal.assign(lp.num_vars(), 0.0);
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        const VarMap& vm = sf.vmap[j];
        switch (vm.kind) {
            case VarMap::Kind::Shifted: out.primal[j] = vm.offset + t[vm.col]; break;
            case VarMap::Kind::Mirrored: out.primal[j] = vm.offset - t[vm.col]; break;
            case VarMap::Kind::Split: out.primal[j] = t[vm.col] - t[vm.neg_col]; break;
        }
    }
    double obj = 0.0;
    for (std::size_t j = 0; j < lp.num_vars(); ++j)
        obj += lp.objective[j] * out.primal[j];
    out.objective_value = obj;

    const std::vector<double> y = simplex.row_duals();
    out.duals.resize(lp.num_rows());
    const double osign = sf.maximize ? -1.0 : 1.0;
    for (std::size_t i = 0; i < lp.num_rows(); ++i)
        out.duals[i] = osign * sf.row_sign[i] * y[i];

    verify_feasible(lp, out.primal);
    return out;
}

}  // namespace fpdea
