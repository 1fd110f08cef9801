#pragma once

#include <vector>

namespace irls::lp {

/// min c^T x  subject to  A x >= b, with few variables and many rows.
struct Problem {
    int vars = 0;               // number of unknowns (columns of A)
    std::vector<double> a;      // row-major, rows() x vars
    std::vector<double> b;
    std::vector<double> c;

    int rows() const { return static_cast<int>(b.size()); }
    double at(int row, int col) const { return a[static_cast<size_t>(row) * vars + col]; }
};

struct Solution {
    std::vector<double> x;
    double objective = 0.0;
};

/// Dense two-phase simplex applied to the dual (the dual has `vars` equality
/// rows, so the tableau stays tiny no matter how many inequality rows the
/// primal carries). Throws Infeasible when no x satisfies Ax >= b and
/// NumericalFailure on cycling/ill-conditioning.
Solution solve(const Problem& problem, double tolerance = 1e-9);

}  // namespace irls::lp
