#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "core/common.hpp"

namespace rrcast {

struct SplineSpec {
    std::vector<double> interior_knots;     // strictly increasing, inside boundaries
    std::array<double, 2> boundary_knots{0, 1};

    int df() const { return static_cast<int>(interior_knots.size()) + 1; }
    void validate() const;
};

/// Cubic B-spline design row over a clamped knot vector.
/// knots must be padded (order-fold boundary replication); out receives one
/// value per basis function (knots.size() - order of them). deriv in 0..2.
void bspline_row(const std::vector<double>& knots, int order, double x, int deriv,
                 double* out);

/// Natural cubic spline basis without an intercept column: m interior knots
/// give m+1 columns. Second derivatives vanish at and beyond the boundary
/// knots; evaluation outside the boundaries extends linearly.
Eigen::MatrixXd natural_cubic_basis(const std::vector<double>& x, const SplineSpec& spec);

/// Basis spec with interior knots at the 33%/66% empirical quantiles and
/// boundary knots at the min/max of the supplied values.
SplineSpec quantile_knot_spec(const std::vector<double>& values);

}  // namespace rrcast
