#include "core/spline.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace rrcast {

void SplineSpec::validate() const {
    if (!(boundary_knots[0] < boundary_knots[1]))
        throw NumericError("spline boundary knots must be increasing");
    double prev = boundary_knots[0];
    for (double k : interior_knots) {
        if (!(k > prev))
            throw NumericError("spline interior knots must be strictly increasing and "
                               "strictly inside the boundary knots");
        prev = k;
    }
    if (!interior_knots.empty() && !(interior_knots.back() < boundary_knots[1]))
        throw NumericError("spline interior knots must lie strictly inside the boundary knots");
    for (double k : interior_knots)
        if (!std::isfinite(k)) throw NumericError("non-finite spline knot");
}

namespace {

// Cox-de Boor values of all B-splines of the requested order at x.
// Assumes x inside [knots[order-1], knots[n]] where n = #basis functions.
void bspline_values(const std::vector<double>& t, int order, double x, double* out) {
    const int nb = static_cast<int>(t.size()) - order;
    for (int i = 0; i < nb; ++i) out[i] = 0.0;

    // Locate the knot span, treating the right boundary as closed.
    int span = -1;
    if (x >= t[nb]) {
        span = nb - 1;
        while (span > 0 && t[span] == t[span + 1]) --span;
    } else {
        for (int i = order - 1; i < nb; ++i)
            if (x >= t[i] && x < t[i + 1]) { span = i; break; }
    }
    if (span < 0) throw NumericError("b-spline evaluation point outside knot range");

    // Order-1 seed, then raise the order in place over the full index set.
    std::vector<double> b(t.size(), 0.0);
    b[span] = 1.0;
    for (int k = 2; k <= order; ++k) {
        for (int i = std::max(0, span - k + 1); i <= span; ++i) {
            double left = 0.0, right = 0.0;
            double dl = t[i + k - 1] - t[i];
            double dr = t[i + k] - t[i + 1];
            if (dl > 0) left = (x - t[i]) / dl * b[i];
            if (dr > 0) right = (t[i + k] - x) / dr * b[i + 1];
            b[i] = left + right;
        }
    }
    for (int i = 0; i < nb; ++i) out[i] = b[i];
}

}  // namespace

void bspline_row(const std::vector<double>& knots, int order, double x, int deriv,
                 double* out) {
    const int nb = static_cast<int>(knots.size()) - order;
    if (deriv == 0) {
        bspline_values(knots, order, x, out);
        return;
    }
    // d/dx B_{i,k} = (k-1) * ( B_{i,k-1}/(t_{i+k-1}-t_i) - B_{i+1,k-1}/(t_{i+k}-t_{i+1}) )
    std::vector<double> lower(nb + 1, 0.0);
    bspline_row(knots, order - 1, x, deriv - 1, lower.data());
    for (int i = 0; i < nb; ++i) {
        double a = 0.0, b = 0.0;
        double dl = knots[i + order - 1] - knots[i];
        double dr = knots[i + order] - knots[i + 1];
        if (dl > 0) a = lower[i] / dl;
        if (dr > 0) b = lower[i + 1] / dr;
        out[i] = (order - 1) * (a - b);
    }
}

Eigen::MatrixXd natural_cubic_basis(const std::vector<double>& x, const SplineSpec& spec) {
    spec.validate();
    for (double v : x)
        if (!std::isfinite(v)) throw NumericError("non-finite x in natural_cubic_basis");
    {
        std::set<double> distinct(x.begin(), x.end());
        if (distinct.size() < 2)
            throw NumericError("natural_cubic_basis needs at least 2 distinct x values");
    }

    const int order = 4;
    const double a = spec.boundary_knots[0];
    const double b = spec.boundary_knots[1];
    const int m = static_cast<int>(spec.interior_knots.size());
    std::vector<double> t;
    t.insert(t.end(), order, a);
    t.insert(t.end(), spec.interior_knots.begin(), spec.interior_knots.end());
    t.insert(t.end(), order, b);
    const int nb = m + order;  // cubic B-spline count

    // Null space of the boundary second-derivative constraints, with the
    // first B-spline column dropped so the returned basis excludes the
    // intercept direction.
    Eigen::MatrixXd constraint(2, nb);
    {
        std::vector<double> r0(nb), r1(nb);
        bspline_row(t, order, a, 2, r0.data());
        bspline_row(t, order, b, 2, r1.data());
        for (int j = 0; j < nb; ++j) {
            constraint(0, j) = r0[j];
            constraint(1, j) = r1[j];
        }
    }
    Eigen::MatrixXd c1 = constraint.rightCols(nb - 1);  // drop intercept column
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(c1.transpose());
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd null_basis = q.rightCols(nb - 3);  // (nb-1) x (m+1)

    const int ncol = m + 1;
    Eigen::MatrixXd out(static_cast<int>(x.size()), ncol);

    // Boundary value and slope rows drive linear extrapolation outside [a,b].
    std::vector<double> row(nb), drow(nb);
    auto natural_row = [&](double xv, Eigen::RowVectorXd& dest) {
        bspline_row(t, order, xv, 0, row.data());
        Eigen::Map<Eigen::RowVectorXd> full(row.data(), nb);
        dest = full.tail(nb - 1) * null_basis;
    };
    auto natural_drow = [&](double xv, Eigen::RowVectorXd& dest) {
        bspline_row(t, order, xv, 1, drow.data());
        Eigen::Map<Eigen::RowVectorXd> full(drow.data(), nb);
        dest = full.tail(nb - 1) * null_basis;
    };
    Eigen::RowVectorXd va(ncol), da(ncol), vb(ncol), db(ncol), tmp(ncol);
    natural_row(a, va);
    natural_drow(a, da);
    natural_row(b, vb);
    natural_drow(b, db);

    for (size_t i = 0; i < x.size(); ++i) {
        const double xv = x[i];
        if (xv < a) {
            out.row(i) = va + (xv - a) * da;
        } else if (xv > b) {
            out.row(i) = vb + (xv - b) * db;
        } else {
            natural_row(xv, tmp);
            out.row(i) = tmp;
        }
    }
    return out;
}

SplineSpec quantile_knot_spec(const std::vector<double>& values) {
    if (values.size() < 3)
        throw NumericError("need at least 3 values to place quantile knots");
    SplineSpec spec;
    spec.boundary_knots = {*std::min_element(values.begin(), values.end()),
                           *std::max_element(values.begin(), values.end())};
    double k1 = quantile(values, 1.0 / 3.0);
    double k2 = quantile(values, 2.0 / 3.0);
    if (!(spec.boundary_knots[0] < k1 && k1 < k2 && k2 < spec.boundary_knots[1]))
        throw NumericError("degenerate covariate distribution: quantile knots collapse");
    spec.interior_knots = {k1, k2};
    return spec;
}

}  // namespace rrcast
