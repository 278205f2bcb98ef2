#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "core/panel.hpp"
#include "core/spline.hpp"

namespace rrcast {

struct LagWindow {
    int lag_min = 3;
    int lag_max = 12;

    int n_lags() const { return lag_max - lag_min + 1; }
    void validate() const {
        if (lag_min < 0 || lag_max < lag_min)
            throw ConfigError("invalid lag window: need 0 <= lag_min <= lag_max");
    }
};

enum class ExposureKind { linear, spline };

struct CrossBasisSpec {
    ExposureKind exposure = ExposureKind::linear;
    std::optional<SplineSpec> exposure_spline;  // required for spline exposure
    SplineSpec lag_spline;
    LagWindow window;

    int exposure_df() const {
        return exposure == ExposureKind::linear ? 1 : exposure_spline->df();
    }
    int lag_df() const { return lag_spline.df(); }
    int n_columns() const { return exposure_df() * lag_df(); }
};

struct CrossBasisColumn {
    std::string covariate;
    int exposure_index = 0;
    int lag_index = 0;
};

/// Distributed-lag design block. Rows follow region-major cell order
/// (cell = region * n_months + month); rows with month < valid_from have
/// incomplete lag history and must not enter a likelihood.
struct CrossBasis {
    Eigen::MatrixXd columns;
    std::vector<CrossBasisColumn> column_meta;
    int valid_from = 0;
    int n_months = 0;
};

/// Natural-cubic lag basis over [lag_min, lag_max] with 2 interior knots at
/// equally spaced log-lag values (shifted log scale when lag_min == 0).
SplineSpec default_lag_spline(const LagWindow& window);

/// column (j,k) at cell (i,t) = sum_l B_exp_j(x_{i,t-l}) * B_lag_k(l).
CrossBasis cross_basis(const CovariatePanel& cov, const CrossBasisSpec& spec);

/// Total log-RR contribution of sustained exposure x across the lag window:
/// effect(x) = sum_l sum_{j,k} beta_{jk} B_exp_j(x) B_lag_k(l).
std::vector<double> cumulative_exposure_response(const Eigen::VectorXd& coefficients,
                                                 const CrossBasisSpec& spec,
                                                 const std::vector<double>& x_grid);

/// Exposure basis values for a batch of points (1 column for linear).
Eigen::MatrixXd exposure_basis(const std::vector<double>& x, const CrossBasisSpec& spec);

/// Lag basis evaluated at the integer lags of the window, n_lags x lag_df.
Eigen::MatrixXd lag_basis_matrix(const CrossBasisSpec& spec);

}  // namespace rrcast
