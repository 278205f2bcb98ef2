#include "core/lagbasis.hpp"

#include <cmath>

namespace rrcast {

SplineSpec default_lag_spline(const LagWindow& window) {
    window.validate();
    SplineSpec spec;
    spec.boundary_knots = {static_cast<double>(window.lag_min),
                           static_cast<double>(window.lag_max)};
    if (window.lag_min > 0) {
        const double la = std::log(window.lag_min);
        const double lb = std::log(window.lag_max);
        spec.interior_knots = {std::exp(la + (lb - la) / 3.0),
                               std::exp(la + 2.0 * (lb - la) / 3.0)};
    } else {
        // log(l+1) spacing keeps the scale defined at lag 0
        const double lb = std::log(window.lag_max + 1.0);
        spec.interior_knots = {std::exp(lb / 3.0) - 1.0, std::exp(2.0 * lb / 3.0) - 1.0};
    }
    return spec;
}

Eigen::MatrixXd exposure_basis(const std::vector<double>& x, const CrossBasisSpec& spec) {
    if (spec.exposure == ExposureKind::linear) {
        Eigen::MatrixXd out(static_cast<int>(x.size()), 1);
        for (size_t i = 0; i < x.size(); ++i) out(i, 0) = x[i];
        return out;
    }
    if (!spec.exposure_spline)
        throw ConfigError("spline exposure requested without a spline spec");
    return natural_cubic_basis(x, *spec.exposure_spline);
}

Eigen::MatrixXd lag_basis_matrix(const CrossBasisSpec& spec) {
    std::vector<double> lags;
    for (int l = spec.window.lag_min; l <= spec.window.lag_max; ++l)
        lags.push_back(static_cast<double>(l));
    return natural_cubic_basis(lags, spec.lag_spline);
}

CrossBasis cross_basis(const CovariatePanel& cov, const CrossBasisSpec& spec) {
    spec.window.validate();
    const int R = static_cast<int>(cov.regions.size());
    const int T = cov.months.size();
    const int valid_from = spec.window.lag_max;
    if (valid_from >= T)
        throw DataError("covariate '" + cov.name + "': insufficient history, no month has "
                        "complete lags (need > " + std::to_string(spec.window.lag_max) +
                        " months, have " + std::to_string(T) + ")");

    // Exposure basis per (region, month) once, then combine along lags.
    std::vector<double> flat(static_cast<size_t>(R) * T);
    for (int i = 0; i < R; ++i)
        for (int t = 0; t < T; ++t) flat[static_cast<size_t>(i) * T + t] = cov.values(i, t);
    Eigen::MatrixXd exp_b = exposure_basis(flat, spec);     // (R*T) x exp_df
    Eigen::MatrixXd lag_b = lag_basis_matrix(spec);         // n_lags x lag_df

    const int exp_df = spec.exposure_df();
    const int lag_df = spec.lag_df();
    CrossBasis out;
    out.valid_from = valid_from;
    out.n_months = T;
    out.columns = Eigen::MatrixXd::Zero(R * T, exp_df * lag_df);
    for (int j = 0; j < exp_df; ++j)
        for (int k = 0; k < lag_df; ++k)
            out.column_meta.push_back(CrossBasisColumn{cov.name, j, k});

    for (int i = 0; i < R; ++i) {
        for (int t = valid_from; t < T; ++t) {
            const int cell = i * T + t;
            for (int li = 0; li < spec.window.n_lags(); ++li) {
                const int src = i * T + (t - (spec.window.lag_min + li));
                for (int j = 0; j < exp_df; ++j) {
                    const double e = exp_b(src, j);
                    for (int k = 0; k < lag_df; ++k)
                        out.columns(cell, j * lag_df + k) += e * lag_b(li, k);
                }
            }
        }
    }
    return out;
}

std::vector<double> cumulative_exposure_response(const Eigen::VectorXd& coefficients,
                                                 const CrossBasisSpec& spec,
                                                 const std::vector<double>& x_grid) {
    const int exp_df = spec.exposure_df();
    const int lag_df = spec.lag_df();
    if (coefficients.size() != exp_df * lag_df)
        throw NumericError("coefficient length " + std::to_string(coefficients.size()) +
                           " does not match cross-basis block size " +
                           std::to_string(exp_df * lag_df));
    Eigen::MatrixXd lag_b = lag_basis_matrix(spec);
    Eigen::VectorXd lag_sums = lag_b.colwise().sum();  // S_k = sum_l B_lag_k(l)

    Eigen::VectorXd per_exposure(exp_df);
    for (int j = 0; j < exp_df; ++j) {
        double acc = 0;
        for (int k = 0; k < lag_df; ++k) acc += coefficients[j * lag_df + k] * lag_sums[k];
        per_exposure[j] = acc;
    }
    Eigen::MatrixXd exp_b = exposure_basis(x_grid, spec);
    std::vector<double> out(x_grid.size());
    for (size_t i = 0; i < x_grid.size(); ++i)
        out[i] = exp_b.row(i).dot(per_exposure);
    return out;
}

}  // namespace rrcast
