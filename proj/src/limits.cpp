#include "bouquet/limits.hpp"

#include "bouquet/links.hpp"
#include "bouquet/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bouquet {

namespace {

template <class T>
void require_monotone(const std::vector<T>& grid)
{
    if (grid.size() < 2)
        return;
    const bool up = grid[1] > grid[0];
    for (std::size_t i = 1; i < grid.size(); ++i)
        if ((up && !(grid[i] > grid[i - 1])) || (!up && !(grid[i] < grid[i - 1])))
            throw InvalidInput("sweep grid must be strictly monotone");
}

double log_factorial(double m)
{
    int sign = 0;
    return lgamma_r(m + 1.0, &sign);
}

} // namespace

bool SweepReport::strictly_decreasing() const
{
    for (std::size_t i = 1; i < errors.size(); ++i)
        if (!(errors[i] < errors[i - 1]))
            return false;
    return true;
}

bool SweepReport::decreasing_with_slack(double slack) const
{
    for (std::size_t i = 1; i < errors.size(); ++i)
        if (errors[i] > slack * errors[i - 1])
            return false;
    return true;
}

bool SweepReport::all_exact_zero() const
{
    if (exact_errors.empty())
        return false;
    for (const auto& e : exact_errors)
        if (!e || sgn(*e) != 0)
            return false;
    return true;
}

void fit_rate(SweepReport& report)
{
    const std::size_t n = report.grid.size();
    const std::size_t first = n / 2;
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = first; i < n; ++i)
        if (report.errors[i] > 0.0 && report.grid[i] > 0.0)
            pts.emplace_back(std::log(report.grid[i]), std::log(report.errors[i]));
    if (pts.size() < 2) {
        report.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
        report.fitted_log_constant = std::numeric_limits<double>::quiet_NaN();
        report.fit_residual = std::numeric_limits<double>::quiet_NaN();
        return;
    }
    double sx = 0, sy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
    }
    const double k = static_cast<double>(pts.size());
    const double mx = sx / k;
    const double my = sy / k;
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    const double b = sxy / sxx;
    const double a = my - b * mx;
    double rss = 0;
    for (const auto& [x, y] : pts)
        rss += (y - a - b * x) * (y - a - b * x);
    report.fitted_exponent = b;
    report.fitted_log_constant = a;
    report.fit_residual = std::sqrt(rss / k);
}

SweepReport thm5_sweep(const Partition& mu, const Partition& nu, const Rational& r, const Rational& r_prime,
                       const std::vector<long>& grid)
{
    if (sgn(r) <= 0 || r_prime <= r)
        throw InvalidInput("thm5 sweep requires 0 < r < r'");
    if (!contains(mu, nu))
        throw InvalidInput("thm5 sweep requires mu contained in nu");
    require_monotone(grid);
    const Rational ratio = r_prime / r;
    const Rational q = r / r_prime;
    SweepReport report;
    report.name = "thm5";
    report.parameters = {{"mu", mu.to_string()}, {"nu", nu.to_string()}, {"r", to_fraction_string(r)},
                         {"r_prime", to_fraction_string(r_prime)}};
    const Rational limit = yb_link_entry(nu, mu, q);
    for (long n : grid) {
        if (n < 1 || nu.length() > n)
            throw InvalidInput("thm5 sweep: every grid level needs N >= max(1, l(nu))");
        // Round half up.
        const Rational target = Rational(n) * ratio + Rational(1, 2);
        BigInt n_prime_big;
        mpz_fdiv_q(n_prime_big.get_mpz_t(), target.get_num_mpz_t(), target.get_den_mpz_t());
        const long n_prime = n_prime_big.get_si();
        if (n_prime <= n)
            throw InvalidInput("thm5 sweep: rounded N' must exceed N");
        Rational value(weyl_dim(mu, static_cast<int>(n)) * skew_schur_principal(mu, nu, n_prime - n),
                       weyl_dim(nu, static_cast<int>(n_prime)));
        value.canonicalize();
        const Rational err = abs(value - limit);
        report.grid.push_back(static_cast<double>(n));
        report.exact_errors.emplace_back(err);
        report.errors.push_back(err.get_d());
        report.tail_bounds.push_back(0.0);
        report.realized_ratio.push_back(static_cast<double>(n_prime) / static_cast<double>(n));
    }
    fit_rate(report);
    if (report.all_exact_zero()) {
        report.passed = true;
        report.verdict = "errors identically zero";
    } else {
        report.passed = report.strictly_decreasing() && report.fitted_exponent >= -1.6
            && report.fitted_exponent <= -0.6;
        report.verdict = "strictly decreasing errors, fitted exponent in [-1.6, -0.6]";
    }
    return report;
}

SweepReport thm6_sweep(const ZParams& zp, const Rational& r, const Partition& mu, const std::vector<long>& grid)
{
    zp.validate();
    if (sgn(r) <= 0)
        throw InvalidInput("thm6 sweep requires r > 0");
    require_monotone(grid);
    const ZParams limit_params{-zp.z, -zp.z_prime};
    const double limit = z_measure(limit_params, r.get_d(), mu);
    SweepReport report;
    report.name = "thm6";
    report.parameters = {{"z", to_string(zp.z)}, {"z_prime", to_string(zp.z_prime)}, {"r", to_fraction_string(r)},
                         {"mu", mu.to_string()}};
    for (long n : grid) {
        if (n < 1 || mu.length() > n)
            throw InvalidInput("thm6 sweep: every grid level needs N >= max(1, l(mu))");
        const ZWParams p{zp.z, zp.z_prime, GaussianRational{}, GaussianRational(Rational(Rational(n) / r))};
        p.validate();
        const double value = zw_measure_rewritten(p, Signature(mu, static_cast<int>(n)));
        report.grid.push_back(static_cast<double>(n));
        report.errors.push_back(std::abs(value - limit));
        report.exact_errors.emplace_back(std::nullopt);
        report.tail_bounds.push_back(0.0);
    }
    fit_rate(report);
    report.passed = report.decreasing_with_slack(1.1);
    report.verdict = "errors decreasing along the grid (slack 1.1)";
    return report;
}

double thm7_pure_gamma_closed_form(double delta, double eps, long level, const Partition& mu)
{
    const double x = eps * delta;
    const double m = mu.size();
    const double log_part = -static_cast<double>(level) * x + (m > 0 ? m * std::log(x) : 0.0) - log_factorial(m);
    return weyl_dim(mu, static_cast<int>(level)).get_d() * dim_standard(mu).get_d() * std::exp(log_part);
}

SweepReport thm7_sweep(const RealPoint& omega, double r, const Partition& mu, const std::vector<double>& eps_grid,
                       const TailBudget& budget)
{
    omega.validate();
    if (!(r > 0.0))
        throw InvalidInput("thm7 sweep requires r > 0");
    require_monotone(eps_grid);
    const double limit = yb_boundary_kernel(omega, r, mu);
    SweepReport report;
    report.name = "thm7";
    report.parameters = {{"r", format_real(r)}, {"mu", mu.to_string()}};
    for (double eps : eps_grid) {
        if (!(eps > 0.0))
            throw InvalidInput("thm7 sweep requires eps > 0");
        const long n = std::lround(r / eps);
        if (n < 1 || mu.length() > n)
            throw InvalidInput("thm7 sweep: N(eps) = round(r/eps) must be at least max(1, l(mu))");
        const GTBoundaryPoint point{omega.scaled(eps), RealPoint{}};
        const BoundaryValue value = gt_boundary_kernel(point, Signature(mu, static_cast<int>(n)), budget);
        report.grid.push_back(eps);
        report.errors.push_back(std::abs(value.value - limit));
        report.exact_errors.emplace_back(std::nullopt);
        report.tail_bounds.push_back(value.tail_bound);
    }
    fit_rate(report);
    report.passed = report.decreasing_with_slack(1.1);
    report.verdict = "errors decreasing as eps shrinks (slack 1.1)";
    return report;
}

SweepReport lemma5_sup(double r, int k, const std::vector<double>& r_prime_grid, const std::vector<double>& x_grid)
{
    if (!(r > 0.0) || k < 0)
        throw InvalidInput("lemma5 sweep requires r > 0 and k >= 0");
    require_monotone(r_prime_grid);
    SweepReport report;
    report.name = "lemma5";
    report.parameters = {{"r", format_real(r)}, {"k", std::to_string(k)}};
    for (double rp : r_prime_grid) {
        if (!(rp > r))
            throw InvalidInput("lemma5 sweep requires r' > r");
        double worst = 0.0;
        for (double x : x_grid) {
            if (x < 0.0)
                throw InvalidInput("lemma5 sweep requires x >= 0");
            const double xk = std::pow(x, k);
            const double lhs = std::exp(rp * x * std::log1p(-r / rp)) * xk;
            const double rhs = std::exp(-r * x) * xk;
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        report.grid.push_back(rp);
        report.errors.push_back(worst);
        report.exact_errors.emplace_back(std::nullopt);
        report.tail_bounds.push_back(0.0);
    }
    fit_rate(report);
    report.passed = report.decreasing_with_slack(1.1);
    report.verdict = "sup error decreasing in r' (slack 1.1)";
    return report;
}

SweepReport cor2_sup(const Partition& mu, const std::vector<long>& l_grid)
{
    require_monotone(l_grid);
    SweepReport report;
    report.name = "cor2";
    report.parameters = {{"mu", mu.to_string()}};
    for (long l : l_grid) {
        if (l < mu.size())
            throw InvalidInput("cor2 sweep requires |mu| <= l for every grid point");
        Rational worst = 0;
        for (const auto& lambda : enumerate_partitions(static_cast<int>(l))) {
            Rational ratio(dim_skew(mu, lambda), dim_standard(lambda));
            ratio.canonicalize();
            const ExactPoint point = omega_of(lambda).scaled(Rational(1, l));
            const Rational err = abs(ratio - schur(mu, point));
            worst = std::max(worst, err);
        }
        report.grid.push_back(static_cast<double>(l));
        report.exact_errors.emplace_back(worst);
        report.errors.push_back(worst.get_d());
        report.tail_bounds.push_back(0.0);
        report.bound_constant = std::max(report.bound_constant, static_cast<double>(l) * worst.get_d());
    }
    fit_rate(report);
    if (report.all_exact_zero()) {
        report.passed = true;
        report.verdict = "errors identically zero";
    } else {
        report.passed = report.decreasing_with_slack(1.1);
        report.verdict = "max error decreasing in l (slack 1.1); bounded by C/l";
    }
    return report;
}

} // namespace bouquet
