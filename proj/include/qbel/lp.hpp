#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbel/error.hpp"
#include "qbel/rational.hpp"

namespace qbel {

enum class ConstraintSense { less_equal, equal, greater_equal };

struct LinearConstraint {
    std::vector<Rational> coefficients; // one per variable
    ConstraintSense sense = ConstraintSense::less_equal;
    Rational rhs = 0;
};

// Maximization over nonnegative variables. Small and dense: the systems
// solved here have a handful of variables and at most a few hundred rows.
struct LinearSystem {
    std::vector<std::string> variables;
    std::vector<LinearConstraint> constraints;
    std::vector<Rational> objective;
};

enum class LpStatus { optimal, infeasible, unbounded };

inline std::string_view to_string(LpStatus s) {
    switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
    }
    return "infeasible";
}

struct LpOutcome {
    LpStatus status = LpStatus::infeasible;
    Rational optimal_value = 0;                                // valid when optimal
    std::vector<std::pair<std::string, Rational>> assignment;  // variable order, when optimal

    const Rational& value_of(std::string_view name) const {
        for (const auto& [var, value] : assignment)
            if (var == name)
                return value;
        throw internal_error("no assignment for variable '" + std::string(name) + "'");
    }
};

// Plain-text rendering of a system, one constraint per line.
inline std::string debug_dump(const LinearSystem& sys) {
    const auto term_string = [&](const std::vector<Rational>& coeffs) {
        std::string line;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j] == 0)
                continue;
            if (line.empty())
                line += (coeffs[j] < 0 ? "-" : "");
            else
                line += (coeffs[j] < 0 ? " - " : " + ");
            const Rational mag = abs(coeffs[j]);
            if (mag != 1)
                line += rational_string(mag) + "*";
            line += sys.variables[j];
        }
        return line.empty() ? std::string("0") : line;
    };
    std::string out = "maximize " + term_string(sys.objective) + "\n";
    for (const auto& c : sys.constraints) {
        const char* rel = c.sense == ConstraintSense::less_equal      ? "<="
                          : c.sense == ConstraintSense::greater_equal ? ">="
                                                                      : "=";
        out += term_string(c.coefficients) + " " + rel + " " + rational_string(c.rhs) + "\n";
    }
    return out;
}

namespace lp_detail {

// Dense two-phase primal simplex over exact rationals with Bland's rule.
// Deterministic by construction: the entering column is the smallest index
// with a negative reduced cost and ratio-test ties go to the smallest basic
// variable.
class Simplex {
public:
    explicit Simplex(const LinearSystem& sys) : sys_(sys) {
        validate();
        build();
    }

    LpOutcome run() {
        if (first_artificial_ < ncols_) {
            std::vector<Rational> phase1(ncols_, Rational(0));
            for (std::size_t j = first_artificial_; j < ncols_; ++j)
                phase1[j] = -1;
            if (!maximize(phase1, ncols_))
                throw internal_error("phase-1 objective cannot be unbounded");
            if (zrow_[ncols_] != 0)
                return LpOutcome{LpStatus::infeasible, 0, {}};
            drive_out_artificials();
        }

        std::vector<Rational> cost(ncols_, Rational(0));
        for (std::size_t j = 0; j < sys_.variables.size(); ++j)
            cost[j] = sys_.objective[j];
        if (!maximize(cost, first_artificial_))
            return LpOutcome{LpStatus::unbounded, 0, {}};

        return extract(cost);
    }

private:
    void validate() const {
        const std::size_t nv = sys_.variables.size();
        if (sys_.objective.size() != nv)
            throw input_error("objective length does not match the variable count");
        for (const auto& c : sys_.constraints)
            if (c.coefficients.size() != nv)
                throw input_error("constraint length does not match the variable count");
        for (std::size_t i = 0; i < nv; ++i)
            for (std::size_t j = i + 1; j < nv; ++j)
                if (sys_.variables[i] == sys_.variables[j])
                    throw input_error("duplicate variable name: '" + sys_.variables[i] + "'");
    }

    void build() {
        const std::size_t nv = sys_.variables.size();
        const std::size_t m = sys_.constraints.size();

        struct NormRow {
            std::vector<Rational> a;
            Rational rhs;
            ConstraintSense sense;
        };
        std::vector<NormRow> norm;
        norm.reserve(m);
        std::size_t n_slack = 0, n_artificial = 0;
        for (const auto& c : sys_.constraints) {
            NormRow row{c.coefficients, c.rhs, c.sense};
            // Normalize so that >= rows keep a strictly positive right-hand
            // side; everything else flips to <= or stays an equality with a
            // nonnegative right-hand side.
            bool flip = false;
            switch (row.sense) {
            case ConstraintSense::equal: flip = row.rhs < 0; break;
            case ConstraintSense::greater_equal: flip = row.rhs <= 0; break;
            case ConstraintSense::less_equal: flip = row.rhs < 0; break;
            }
            if (flip) {
                for (auto& v : row.a)
                    v = -v;
                row.rhs = -row.rhs;
                if (row.sense == ConstraintSense::greater_equal)
                    row.sense = ConstraintSense::less_equal;
                else if (row.sense == ConstraintSense::less_equal)
                    row.sense = ConstraintSense::greater_equal;
            }
            if (row.sense != ConstraintSense::equal)
                ++n_slack;
            if (row.sense != ConstraintSense::less_equal)
                ++n_artificial;
            norm.push_back(std::move(row));
        }

        first_artificial_ = nv + n_slack;
        ncols_ = first_artificial_ + n_artificial;
        tableau_.assign(m, std::vector<Rational>(ncols_ + 1, Rational(0)));
        basis_.assign(m, 0);

        std::size_t slack_col = nv;
        std::size_t artificial_col = first_artificial_;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < nv; ++j)
                tableau_[i][j] = norm[i].a[j];
            tableau_[i][ncols_] = norm[i].rhs;
            switch (norm[i].sense) {
            case ConstraintSense::less_equal:
                tableau_[i][slack_col] = 1;
                basis_[i] = slack_col++;
                break;
            case ConstraintSense::greater_equal:
                tableau_[i][slack_col] = -1;
                ++slack_col;
                tableau_[i][artificial_col] = 1;
                basis_[i] = artificial_col++;
                break;
            case ConstraintSense::equal:
                tableau_[i][artificial_col] = 1;
                basis_[i] = artificial_col++;
                break;
            }
        }
    }

    void pivot(std::size_t prow, std::size_t pcol) {
        auto& row = tableau_[prow];
        const Rational inv = Rational(1) / row[pcol];
        for (auto& v : row)
            v *= inv;
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            if (i == prow || tableau_[i][pcol] == 0)
                continue;
            const Rational factor = tableau_[i][pcol];
            for (std::size_t j = 0; j <= ncols_; ++j)
                tableau_[i][j] -= factor * row[j];
        }
        basis_[prow] = pcol;
    }

    void rebuild_zrow(const std::vector<Rational>& cost) {
        zrow_.assign(ncols_ + 1, Rational(0));
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j <= ncols_; ++j)
                zrow_[j] += cb * tableau_[i][j];
        }
        for (std::size_t j = 0; j < ncols_; ++j)
            zrow_[j] -= cost[j];
    }

    // Returns false when the objective is unbounded above.
    bool maximize(const std::vector<Rational>& cost, std::size_t allowed_cols) {
        rebuild_zrow(cost);
        while (true) {
            std::size_t enter = allowed_cols;
            for (std::size_t j = 0; j < allowed_cols; ++j)
                if (zrow_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == allowed_cols)
                return true;

            std::size_t leave = tableau_.size();
            Rational best_ratio;
            for (std::size_t i = 0; i < tableau_.size(); ++i) {
                if (tableau_[i][enter] <= 0)
                    continue;
                const Rational ratio = tableau_[i][ncols_] / tableau_[i][enter];
                if (leave == tableau_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == tableau_.size())
                return false;

            pivot(leave, enter);
            const Rational factor = zrow_[enter];
            if (factor != 0)
                for (std::size_t j = 0; j <= ncols_; ++j)
                    zrow_[j] -= factor * tableau_[leave][j];
        }
    }

    // Basic artificials left at value zero after phase 1 are exchanged for a
    // real column, or their rows dropped when redundant, so that phase 2 can
    // never push an artificial positive again.
    void drive_out_artificials() {
        std::vector<std::size_t> drop;
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            if (basis_[i] < first_artificial_)
                continue;
            if (tableau_[i][ncols_] != 0)
                throw internal_error("feasible phase 1 left a positive artificial");
            std::size_t col = first_artificial_;
            for (std::size_t j = 0; j < first_artificial_; ++j)
                if (tableau_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col == first_artificial_)
                drop.push_back(i); // redundant row
            else
                pivot(i, col);
        }
        for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
            tableau_.erase(tableau_.begin() + static_cast<std::ptrdiff_t>(*it));
            basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(*it));
        }
    }

    LpOutcome extract(const std::vector<Rational>& cost) const {
        const std::size_t nv = sys_.variables.size();
        std::vector<Rational> x(nv, Rational(0));
        for (std::size_t i = 0; i < tableau_.size(); ++i)
            if (basis_[i] < nv)
                x[basis_[i]] = tableau_[i][ncols_];

        // Exact re-substitution into the original constraints.
        for (const auto& c : sys_.constraints) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < nv; ++j)
                lhs += c.coefficients[j] * x[j];
            const bool ok = c.sense == ConstraintSense::less_equal      ? lhs <= c.rhs
                            : c.sense == ConstraintSense::greater_equal ? lhs >= c.rhs
                                                                        : lhs == c.rhs;
            if (!ok)
                throw internal_error("solver produced an assignment violating a constraint");
        }
        for (const Rational& v : x)
            if (v < 0)
                throw internal_error("solver produced a negative variable value");

        Rational objective = 0;
        for (std::size_t j = 0; j < nv; ++j)
            objective += sys_.objective[j] * x[j];
        if (objective != zrow_[ncols_])
            throw internal_error("objective value drifted from the tableau");
        (void)cost;

        LpOutcome out{LpStatus::optimal, objective, {}};
        out.assignment.reserve(nv);
        for (std::size_t j = 0; j < nv; ++j)
            out.assignment.emplace_back(sys_.variables[j], x[j]);
        return out;
    }

    const LinearSystem& sys_;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> zrow_;
    std::size_t ncols_ = 0;
    std::size_t first_artificial_ = 0;
};

} // namespace lp_detail

inline LpOutcome solve(const LinearSystem& sys) {
    return lp_detail::Simplex(sys).run();
}

} // namespace qbel
