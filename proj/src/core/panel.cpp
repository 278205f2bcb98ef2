#include "core/panel.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <set>

#include "core/csv.hpp"

namespace rrcast {

int CasePanel::region_index(const std::string& name) const {
    for (size_t i = 0; i < regions.size(); ++i)
        if (regions[i] == name) return static_cast<int>(i);
    return -1;
}

int PopulationPanel::year_index(int year) const {
    for (size_t i = 0; i < years.size(); ++i)
        if (years[i] == year) return static_cast<int>(i);
    throw DataError("population does not cover year " + std::to_string(year));
}

const CovariatePanel& AlignedData::covariate(const std::string& name) const {
    for (const auto& c : covariates)
        if (c.name == name) return c;
    throw DataError("unknown covariate '" + name + "'");
}

namespace {

YearMonth row_month(const CsvTable& t, size_t r, int ycol, int mcol) {
    long long y = parse_int(t.rows[r][ycol]);
    long long m = parse_int(t.rows[r][mcol]);
    if (m < 1 || m > 12)
        throw DataError(t.path + ":" + std::to_string(t.line_numbers[r]) +
                        ": month " + std::to_string(m) + " out of range 1-12");
    return YearMonth{static_cast<int>(y), static_cast<int>(m)};
}

struct CellGrid {
    std::vector<std::string> regions;  // first-appearance order
    MonthRange months;
    Eigen::MatrixXd values;
};

// Reads a region,year,month,<value> file into a rectangular grid. Checks
// rectangularity, month contiguity, and duplicate cells.
CellGrid read_cell_grid(const CsvTable& t, const std::string& value_col) {
    int rcol = t.require_column("region");
    int ycol = t.require_column("year");
    int mcol = t.require_column("month");
    int vcol = t.require_column(value_col);

    std::vector<std::string> regions;
    std::map<std::string, int> region_id;
    int lo = 0, hi = 0;
    bool first = true;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        const auto& name = t.rows[r][rcol];
        if (!region_id.count(name)) {
            region_id[name] = static_cast<int>(regions.size());
            regions.push_back(name);
        }
        int idx = row_month(t, r, ycol, mcol).index();
        lo = first ? idx : std::min(lo, idx);
        hi = first ? idx : std::max(hi, idx);
        first = false;
    }
    if (first) throw DataError(t.path + ": no data rows");

    MonthRange months{YearMonth::from_index(lo), YearMonth::from_index(hi)};
    const int T = months.size();
    const int R = static_cast<int>(regions.size());
    Eigen::MatrixXd values(R, T);
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> seen(R, T);
    seen.setConstant(false);

    for (size_t r = 0; r < t.rows.size(); ++r) {
        int i = region_id[t.rows[r][rcol]];
        int j = row_month(t, r, ycol, mcol).index() - lo;
        if (seen(i, j))
            throw DataError(t.path + ":" + std::to_string(t.line_numbers[r]) +
                            ": duplicate cell for region '" + regions[i] + "' month " +
                            months.at(j).str());
        double v = parse_double(t.rows[r][vcol]);
        if (!std::isfinite(v))
            throw DataError(t.path + ":" + std::to_string(t.line_numbers[r]) +
                            ": non-finite value in field '" + value_col + "'");
        values(i, j) = v;
        seen(i, j) = true;
    }
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < T; ++j) {
            if (!seen(i, j)) {
                // Distinguish a gap (contiguity) from a missing region-month
                // block at the edges (rectangularity).
                bool before = false, after = false;
                for (int k = 0; k < j; ++k) before = before || seen(i, k);
                for (int k = j + 1; k < T; ++k) after = after || seen(i, k);
                if (before && after)
                    throw DataError(t.path + ": non-contiguous months for region '" +
                                    regions[i] + "': gap at " + months.at(j).str());
                throw DataError(t.path + ": region '" + regions[i] +
                                "' missing month " + months.at(j).str());
            }
        }
    }
    return CellGrid{std::move(regions), months, std::move(values)};
}

std::string file_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

}  // namespace

AlignedData load_and_align(const std::string& case_file,
                           const std::string& population_file,
                           const std::vector<std::string>& covariate_files) {
    AlignedData out;

    // Cases define the canonical region ordering and month range.
    CsvTable ct = read_csv(case_file);
    CellGrid cg = read_cell_grid(ct, "cases");
    for (int i = 0; i < cg.values.rows(); ++i)
        for (int j = 0; j < cg.values.cols(); ++j) {
            double v = cg.values(i, j);
            if (v < 0)
                throw DataError(case_file + ": negative count for region '" +
                                cg.regions[i] + "' month " + cg.months.at(j).str());
            if (v != std::floor(v))
                throw DataError(case_file + ": non-integer count for region '" +
                                cg.regions[i] + "' month " + cg.months.at(j).str());
        }
    out.cases = CasePanel{cg.regions, cg.months, cg.values};

    // Population: region,year,population covering every spanned year.
    CsvTable pt = read_csv(population_file);
    int prcol = pt.require_column("region");
    int pycol = pt.require_column("year");
    int pvcol = pt.require_column("population");
    const int y0 = out.cases.months.first.year;
    const int y1 = out.cases.months.last.year;
    std::vector<int> years;
    for (int y = y0; y <= y1; ++y) years.push_back(y);
    const int R = out.cases.n_regions();
    Eigen::MatrixXd pop = Eigen::MatrixXd::Constant(R, years.size(), -1.0);
    for (size_t r = 0; r < pt.rows.size(); ++r) {
        const auto& name = pt.rows[r][prcol];
        int i = out.cases.region_index(name);
        if (i < 0)
            throw DataError(population_file + ":" + std::to_string(pt.line_numbers[r]) +
                            ": region mismatch: unknown region '" + name + "'");
        int y = static_cast<int>(parse_int(pt.rows[r][pycol]));
        if (y < y0 || y > y1) continue;  // extra years are allowed, just unused
        double v = parse_double(pt.rows[r][pvcol]);
        if (!(v > 0))
            throw DataError(population_file + ":" + std::to_string(pt.line_numbers[r]) +
                            ": population must be > 0 in field 'population'");
        pop(i, y - y0) = v;
    }
    for (int i = 0; i < R; ++i)
        for (size_t j = 0; j < years.size(); ++j)
            if (pop(i, j) <= 0)
                throw DataError(population_file + ": region '" + out.cases.regions[i] +
                                "' missing population for year " + std::to_string(years[j]));
    out.population = PopulationPanel{out.cases.regions, years, pop};

    // Covariates: aligned to the case grid; extra months outside the case
    // range are trimmed, missing cells inside it are an error.
    for (const auto& path : covariate_files) {
        CsvTable vt = read_csv(path);
        CellGrid vg = read_cell_grid(vt, "value");
        std::set<std::string> have(vg.regions.begin(), vg.regions.end());
        for (const auto& reg : out.cases.regions)
            if (!have.count(reg))
                throw DataError(path + ": region mismatch: missing region '" + reg + "'");
        for (const auto& reg : vg.regions)
            if (out.cases.region_index(reg) < 0)
                throw DataError(path + ": region mismatch: unknown region '" + reg + "'");
        if (!(vg.months.first <= out.cases.months.first) ||
            !(out.cases.months.last <= vg.months.last))
            throw DataError(path + ": covariate months " + vg.months.first.str() + ".." +
                            vg.months.last.str() + " do not cover case months " +
                            out.cases.months.first.str() + ".." + out.cases.months.last.str());

        const int off = out.cases.months.first.index() - vg.months.first.index();
        const int T = out.cases.n_months();
        Eigen::MatrixXd aligned(R, T);
        for (int i = 0; i < R; ++i) {
            int src = -1;
            for (size_t k = 0; k < vg.regions.size(); ++k)
                if (vg.regions[k] == out.cases.regions[i]) src = static_cast<int>(k);
            aligned.row(i) = vg.values.block(src, off, 1, T);
        }
        out.covariates.push_back(
            CovariatePanel{file_stem(path), out.cases.regions, out.cases.months, aligned});
    }
    return out;
}

ExpectedPanel compute_expected_counts(const CasePanel& cases, const PopulationPanel& pop,
                                      const MonthRange& window) {
    if (!cases.months.contains(window))
        throw DataError("expected-counts window " + window.first.str() + ".." +
                        window.last.str() + " outside case months");
    double total_y = 0, total_pop = 0;
    const int j0 = window.first.index() - cases.months.first.index();
    for (int i = 0; i < cases.n_regions(); ++i)
        for (int j = 0; j < window.size(); ++j) {
            total_y += cases.counts(i, j0 + j);
            total_pop += pop.at(i, window.at(j).year);
        }
    if (total_y <= 0)
        throw DataError("zero total counts in expected-counts window; rate degenerate");
    const double rate = total_y / total_pop;

    ExpectedPanel out{cases.regions, cases.months, Eigen::MatrixXd(cases.n_regions(), cases.n_months())};
    for (int i = 0; i < cases.n_regions(); ++i)
        for (int j = 0; j < cases.n_months(); ++j)
            out.expected(i, j) = pop.at(i, cases.months.at(j).year) * rate;
    return out;
}

RiskPanel observed_relative_risk(const CasePanel& cases, const ExpectedPanel& expected) {
    if (cases.regions != expected.regions || !(cases.months.first == expected.months.first) ||
        !(cases.months.last == expected.months.last))
        throw DataError("case/expected panel shape mismatch");
    RiskPanel out{cases.regions, cases.months, cases.counts.cwiseQuotient(expected.expected)};
    return out;
}

}  // namespace rrcast
