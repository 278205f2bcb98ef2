#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "core/common.hpp"

namespace rrcast {

/// Rectangular region x month store. All panels produced by load_and_align
/// share the same region ordering (first appearance in the case file) and
/// the same contiguous month range. Immutable after construction.
struct CasePanel {
    std::vector<std::string> regions;
    MonthRange months;
    Eigen::MatrixXd counts;  // regions x months, non-negative integers

    int n_regions() const { return static_cast<int>(regions.size()); }
    int n_months() const { return months.size(); }
    int region_index(const std::string& name) const;
};

struct PopulationPanel {
    std::vector<std::string> regions;
    std::vector<int> years;          // contiguous, covers the case panel span
    Eigen::MatrixXd population;      // regions x years, > 0

    int year_index(int year) const;
    double at(int region, int year) const { return population(region, year_index(year)); }
};

struct ExpectedPanel {
    std::vector<std::string> regions;
    MonthRange months;
    Eigen::MatrixXd expected;  // > 0, same shape as CasePanel
};

struct RiskPanel {
    std::vector<std::string> regions;
    MonthRange months;
    Eigen::MatrixXd rr;  // observed relative risk, >= 0
};

struct CovariatePanel {
    std::string name;
    std::vector<std::string> regions;
    MonthRange months;
    Eigen::MatrixXd values;  // regions x months
};

struct AlignedData {
    CasePanel cases;
    PopulationPanel population;
    std::vector<CovariatePanel> covariates;

    const CovariatePanel& covariate(const std::string& name) const;
};

/// Load case, population, and covariate CSV files and align them to the case
/// file's region ordering and month range. Validation failures report the
/// offending file, row, and field.
AlignedData load_and_align(const std::string& case_file,
                           const std::string& population_file,
                           const std::vector<std::string>& covariate_files);

/// E_it = pop_{i,year(t)} * r with a single global rate
/// r = sum_window(Y) / sum_window(pop) computed over the given window. The
/// returned panel covers every month of the case panel, not just the window.
ExpectedPanel compute_expected_counts(const CasePanel& cases, const PopulationPanel& pop,
                                      const MonthRange& window);

/// rr = counts / expected cellwise.
RiskPanel observed_relative_risk(const CasePanel& cases, const ExpectedPanel& expected);

}  // namespace rrcast
