#pragma once

#include "bouquet/boundary.hpp"
#include "bouquet/measures.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bouquet {

/// Error-versus-parameter sweep with a log–log rate fit on the last half of the grid.
struct SweepReport {
    std::string name;
    /// Resolved inputs, echoed by the CLI.
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<double> grid;
    std::vector<double> errors;
    /// Exact errors when the sweep is computed in rationals.
    std::vector<std::optional<Rational>> exact_errors;
    /// Per-point truncation bound of the approximate side; 0 when exact.
    std::vector<double> tail_bounds;
    /// Link sweeps only: the realized N′/N.
    std::vector<double> realized_ratio;

    /// NaN when fewer than two positive errors are available for fitting.
    double fitted_exponent = 0.0;
    double fitted_log_constant = 0.0;
    /// Root-mean-square residual of the fit in log space.
    double fit_residual = 0.0;
    /// Uniform-approximation sweeps only: C = max over the grid of parameter · error.
    double bound_constant = 0.0;
    bool passed = false;
    std::string verdict;

    bool strictly_decreasing() const;
    /// errors[i+1] ≤ slack · errors[i] for every consecutive pair.
    bool decreasing_with_slack(double slack) const;
    bool all_exact_zero() const;
};

/// Least squares fit of log(error) = a + b log(parameter) over the last ceil(n/2) points.
void fit_rate(SweepReport& report);

/// |Λᴳᵀ(ν at N′ → μ at N) − Λʸᴮ(ν → μ; r/r′)| with N′ = round(N r′/r), computed exactly.
SweepReport thm5_sweep(const Partition& mu, const Partition& nu, const Rational& r, const Rational& r_prime,
                       const std::vector<long>& grid);

/// |MGT^{(z,z′,0,N/r)}_N(μ) − MYB^{(−z,−z′)}_r(μ)| over the N grid.
SweepReport thm6_sweep(const ZParams& zp, const Rational& r, const Partition& mu, const std::vector<long>& grid);

/// |Λᴳᵀ∞_{N(ε)}(εω, 0; μ) − Λʸᴮ∞_r(ω, μ)| with N(ε) = round(r/ε).
SweepReport thm7_sweep(const RealPoint& omega, double r, const Partition& mu, const std::vector<double>& eps_grid,
                       const TailBudget& budget = {});

/// Dim[μ, N] e^{−Nεδ}(εδ)^{|μ|} dim μ/|μ|!: the GT boundary kernel when ω is pure δ.
double thm7_pure_gamma_closed_form(double delta, double eps, long level, const Partition& mu);

/// sup over the x grid of |(1 − r/r′)^{r′x} x^k − e^{−rx} x^k| for each r′.
SweepReport lemma5_sup(double r, int k, const std::vector<double>& r_prime_grid, const std::vector<double>& x_grid);

/// max over λ ∈ Y_l of |dim(μ, λ)/dim λ − S_μ(ω_λ / l)| for each l.
SweepReport cor2_sup(const Partition& mu, const std::vector<long>& l_grid);

} // namespace bouquet
