#include "bouquet/boundary.hpp"

#include "bouquet/determinant.hpp"
#include "bouquet/links.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bouquet {

namespace {

double log_factorial(long m)
{
    int sign = 0;
    return lgamma_r(static_cast<double>(m) + 1.0, &sign);
}

bool is_zero_point(const RealPoint& p) { return p.delta == 0.0; }

struct OneSide {
    std::vector<double> coeffs;
    double tail = 0.0;
};

// Taylor coefficients of e^{−γ}Π(1−β)/(1+α) · e^{γu}Π(1+β̃u)/(1−α̃u) up to u^degree.
OneSide one_side_series(const RealPoint& omega, int degree)
{
    OneSide out;
    out.coeffs.assign(static_cast<std::size_t>(degree) + 1, 0.0);
    if (is_zero_point(omega)) {
        out.coeffs[0] = 1.0;
        return out;
    }
    const double gamma = std::max(0.0, omega.gamma());
    double log_const = -gamma;
    std::vector<double> alpha_mod;
    std::vector<double> beta_mod;
    for (double a : omega.alpha) {
        log_const -= std::log1p(a);
        alpha_mod.push_back(a / (1.0 + a));
    }
    for (double b : omega.beta) {
        log_const += std::log1p(-b);
        beta_mod.push_back(b / (1.0 - b));
    }
    auto& c = out.coeffs;
    c[0] = 1.0;
    for (int n = 1; n <= degree; ++n)
        c[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n) - 1] * gamma / n;
    for (double b : beta_mod)
        for (int n = degree; n >= 1; --n)
            c[static_cast<std::size_t>(n)] += b * c[static_cast<std::size_t>(n) - 1];
    for (double a : alpha_mod)
        for (int n = 1; n <= degree; ++n)
            c[static_cast<std::size_t>(n)] += a * c[static_cast<std::size_t>(n) - 1];
    const double scale = std::exp(log_const);
    for (auto& x : c)
        x *= scale;

    // Cauchy bound on the circle |u| = R: coefficients are nonnegative, so a_n ≤ A(R) R^{−n}.
    const double alpha_max = alpha_mod.empty() ? 0.0 : *std::max_element(alpha_mod.begin(), alpha_mod.end());
    auto log_a_at = [&](double radius) {
        double v = log_const + gamma * radius;
        for (double b : beta_mod)
            v += std::log1p(b * radius);
        for (double a : alpha_mod)
            v -= std::log1p(-a * radius);
        return v;
    };
    std::vector<double> radii;
    if (alpha_max > 0.0) {
        const double upper = 1.0 / alpha_max;
        for (int k = 1; k < 40; ++k)
            radii.push_back(1.0 + (upper - 1.0) * k / 40.0);
    } else {
        for (int k = 1; k <= 400; ++k)
            radii.push_back(std::pow(1.1, k));
    }
    if (gamma > 0.0 && (alpha_max == 0.0 || (degree + 1) / gamma < 1.0 / alpha_max))
        radii.push_back(std::max(1.0001, (degree + 1) / gamma));
    double best = std::numeric_limits<double>::infinity();
    for (double radius : radii) {
        if (radius <= 1.0)
            continue;
        const double log_bound = log_a_at(radius) - (degree + 1) * std::log(radius) - std::log1p(-1.0 / radius);
        best = std::min(best, std::exp(log_bound));
    }
    // A polynomial factor alone has no tail once the degree is reached.
    if (gamma == 0.0 && alpha_mod.empty() && static_cast<int>(beta_mod.size()) <= degree)
        best = 0.0;
    out.tail = std::min(best, 1.0);
    return out;
}

std::string vertex_label(const Partition& p) { return p.to_string(); }

} // namespace

void TailBudget::validate() const
{
    if (!(epsilon > 0.0))
        throw InvalidInput("tail budget epsilon must be positive");
    if (initial_degree < 1 || max_degree < initial_degree)
        throw InvalidInput("tail budget degrees are inconsistent");
}

void GTBoundaryPoint::validate() const
{
    plus.validate();
    minus.validate();
    const double b_plus = plus.beta.empty() ? 0.0 : plus.beta.front();
    const double b_minus = minus.beta.empty() ? 0.0 : minus.beta.front();
    if (b_plus + b_minus > 1.0)
        throw InvalidInput("GT boundary point requires beta+_1 + beta-_1 <= 1");
    if (b_plus >= 1.0 || b_minus >= 1.0)
        throw UnsupportedBoundaryPoint("boundary points with beta_1 = 1 are outside the supported expansion");
}

double poisson_kernel(double x, double r, long m)
{
    if (x < 0.0 || r <= 0.0 || m < 0)
        throw InvalidInput("poisson_kernel requires x >= 0, r > 0, m >= 0");
    if (x == 0.0)
        return m == 0 ? 1.0 : 0.0;
    const double mean = r * x;
    return std::exp(-mean + static_cast<double>(m) * std::log(mean) - log_factorial(m));
}

double poisson_tail_bound(double mean, long cutoff)
{
    if (mean == 0.0)
        return 0.0;
    const double ratio = mean / static_cast<double>(cutoff + 2);
    if (ratio >= 1.0)
        return 1.0;
    return std::min(1.0, poisson_kernel(mean, 1.0, cutoff + 1) / (1.0 - ratio));
}

long poisson_cutoff(double mean, const TailBudget& budget)
{
    for (long cutoff = 0; cutoff <= budget.max_cutoff; ++cutoff)
        if (poisson_tail_bound(mean, cutoff) <= budget.epsilon)
            return cutoff;
    throw TailBudgetError("Poisson tail bound does not reach epsilon within the cutoff cap");
}

Rational young_boundary_kernel(const ExactPoint& omega_hat, const Partition& mu)
{
    if (omega_hat.delta != 1)
        throw InvalidInput("young_boundary_kernel requires a Thoma simplex point (delta = 1)");
    return Rational(Rational(dim_standard(mu)) * schur(mu, omega_hat));
}

double young_boundary_kernel(const RealPoint& omega_hat, const Partition& mu)
{
    if (std::abs(omega_hat.delta - 1.0) > 1e-12)
        throw InvalidInput("young_boundary_kernel requires a Thoma simplex point (delta = 1)");
    return dim_standard(mu).get_d() * schur(mu, omega_hat);
}

namespace {

double yb_prefactor(double norm, double r, long m)
{
    return std::exp(-r * norm + static_cast<double>(m) * std::log(r) - log_factorial(m));
}

} // namespace

double yb_boundary_kernel(const ExactPoint& omega, double r, const Partition& mu)
{
    if (r <= 0.0)
        throw InvalidInput("yb_boundary_kernel requires r > 0");
    if (omega.is_origin())
        return mu.empty() ? 1.0 : 0.0;
    const Rational combinatorial = Rational(dim_standard(mu)) * schur(mu, omega);
    return yb_prefactor(omega.delta.get_d(), r, mu.size()) * combinatorial.get_d();
}

double yb_boundary_kernel(const RealPoint& omega, double r, const Partition& mu)
{
    if (r <= 0.0)
        throw InvalidInput("yb_boundary_kernel requires r > 0");
    if (omega.is_origin())
        return mu.empty() ? 1.0 : 0.0;
    return yb_prefactor(omega.delta, r, mu.size()) * dim_standard(mu).get_d() * schur(mu, omega);
}

PhiSeries::PhiSeries(std::vector<double> plus_coeffs, std::vector<double> minus_coeffs, double tail_bound)
    : plus_(std::move(plus_coeffs)), minus_(std::move(minus_coeffs)), tail_bound_(tail_bound)
{
}

double PhiSeries::coefficient(long n) const
{
    const long da = static_cast<long>(plus_.size()) - 1;
    const long db = static_cast<long>(minus_.size()) - 1;
    double s = 0.0;
    for (long k = std::max(0L, -n); k <= db && n + k <= da; ++k)
        s += plus_[static_cast<std::size_t>(n + k)] * minus_[static_cast<std::size_t>(k)];
    return s;
}

PhiSeries gt_phi(const GTBoundaryPoint& point, const TailBudget& budget)
{
    point.validate();
    budget.validate();
    int degree = budget.initial_degree;
    while (true) {
        OneSide a = one_side_series(point.plus, degree);
        OneSide b = one_side_series(point.minus, degree);
        const double tail = a.tail + b.tail;
        if (tail <= budget.epsilon)
            return PhiSeries(std::move(a.coeffs), std::move(b.coeffs), tail);
        if (degree >= budget.max_degree)
            throw TailBudgetError("phi series: tail bound " + format_real(tail) + " above epsilon at degree cap");
        degree = std::min(2 * degree, budget.max_degree);
    }
}

std::map<long, double> gt_phi(const GTBoundaryPoint& point, long first, long last, const TailBudget& budget)
{
    const PhiSeries phi = gt_phi(point, budget);
    std::map<long, double> out;
    for (long n = first; n <= last; ++n)
        out[n] = phi(n);
    return out;
}

double gt_phi_generating(const GTBoundaryPoint& point, double u)
{
    auto side = [](const RealPoint& w, double t) {
        double v = std::max(0.0, w.gamma()) * (t - 1.0);
        for (double b : w.beta)
            v += std::log(1.0 + b * (t - 1.0));
        for (double a : w.alpha)
            v -= std::log(1.0 - a * (t - 1.0));
        return v;
    };
    return std::exp(side(point.plus, u) + side(point.minus, 1.0 / u));
}

BoundaryValue gt_boundary_kernel(const GTBoundaryPoint& point, const Signature& mu, const TailBudget& budget,
                                 DeterminantRoute route)
{
    const PhiSeries phi = gt_phi(point, budget);
    return gt_boundary_kernel(phi, is_zero_point(point.minus), mu, route);
}

BoundaryValue gt_boundary_kernel(const PhiSeries& phi, bool minus_is_origin, const Signature& mu,
                                 DeterminantRoute route)
{
    BoundaryValue out;
    out.tail_bound = phi.tail_bound();
    out.cutoff_used = phi.degree();
    if (minus_is_origin && !mu.is_nonnegative())
        return out;
    if (route == DeterminantRoute::automatic)
        route = minus_is_origin ? DeterminantRoute::collapsed : DeterminantRoute::full;
    if (route == DeterminantRoute::collapsed && !minus_is_origin)
        throw InvalidInput("collapsed determinant requires omega- = 0");
    const int n = mu.level();
    int size = n;
    if (route == DeterminantRoute::collapsed) {
        size = 0;
        while (size < n && mu[static_cast<std::size_t>(size)] != 0)
            ++size;
    }
    SquareMatrix<double> m(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = phi(mu[static_cast<std::size_t>(i)] - i + j);
    double det = determinant(std::move(m));
    if (size < n)
        det *= std::pow(phi(0), n - size);
    out.value = weyl_dim(mu).get_d() * det;
    return out;
}

double CoherenceReport::max_discrepancy() const
{
    double worst = 0.0;
    for (const auto& it : items)
        worst = std::max(worst, it.discrepancy);
    return worst;
}

double CoherenceReport::max_tail_bound() const
{
    double worst = 0.0;
    for (const auto& it : items)
        worst = std::max(worst, it.tail_bound);
    return worst;
}

bool CoherenceReport::passed(double tolerance) const
{
    if (exact)
        return exact_equal;
    return max_discrepancy() <= tolerance;
}

CoherenceReport verify_young_coherence(const ExactPoint& omega_hat, int level)
{
    if (level < 0)
        throw InvalidInput("level must be nonnegative");
    omega_hat.validate();
    CoherenceReport report;
    report.exact = true;
    report.exact_equal = true;
    report.cutoff_used = level + 1;
    const auto upper = enumerate_partitions(level + 1);
    std::vector<Rational> upper_mass;
    for (const auto& nu : upper)
        upper_mass.push_back(young_boundary_kernel(omega_hat, nu));
    for (const auto& mu : enumerate_partitions(level)) {
        Rational lhs = 0;
        for (std::size_t k = 0; k < upper.size(); ++k)
            lhs += upper_mass[k] * young_link_entry(upper[k], mu);
        const Rational rhs = young_boundary_kernel(omega_hat, mu);
        const bool equal = lhs == rhs;
        report.exact_equal = report.exact_equal && equal;
        report.items.push_back({vertex_label(mu), lhs.get_d(), rhs.get_d(), Rational(abs(lhs - rhs)).get_d(), 0.0});
    }
    return report;
}

CoherenceReport verify_binomial_coherence(double x, double r, double r_prime, long max_m, const TailBudget& budget)
{
    if (x < 0.0 || r <= 0.0 || r_prime <= r)
        throw InvalidInput("binomial coherence requires x >= 0 and 0 < r < r'");
    budget.validate();
    const double mean = r_prime * x;
    const long cutoff = std::max(poisson_cutoff(mean, budget), max_m);
    const double q = r / r_prime;
    CoherenceReport report;
    report.cutoff_used = cutoff;
    const double tail = poisson_tail_bound(mean, cutoff);
    for (long m = 0; m <= max_m; ++m) {
        double lhs = 0.0;
        for (long n = m; n <= cutoff; ++n) {
            const double log_binom = log_factorial(n) - log_factorial(m) - log_factorial(n - m)
                + static_cast<double>(m) * std::log(q) + static_cast<double>(n - m) * std::log1p(-q);
            lhs += poisson_kernel(x, r_prime, n) * std::exp(log_binom);
        }
        const double rhs = poisson_kernel(x, r, m);
        report.items.push_back({std::to_string(m), lhs, rhs, std::abs(lhs - rhs), tail});
    }
    return report;
}

CoherenceReport verify_yb_coherence(const ExactPoint& omega, const Rational& r, const Rational& r_prime, int max_size,
                                    const TailBudget& budget)
{
    omega.validate();
    budget.validate();
    if (sgn(r) <= 0 || r_prime <= r)
        throw InvalidInput("YB coherence requires 0 < r < r'");
    const Rational q = r / r_prime;
    const double mean = r_prime.get_d() * omega.delta.get_d();
    const long cutoff = std::max<long>(poisson_cutoff(mean, budget), max_size);
    const double tail = poisson_tail_bound(mean, cutoff);

    std::vector<Partition> targets;
    for (int m = 0; m <= max_size; ++m)
        for (auto& mu : enumerate_partitions(m))
            targets.push_back(std::move(mu));
    std::vector<double> lhs(targets.size(), 0.0);
    for (long n = 0; n <= cutoff; ++n) {
        for (const auto& nu : enumerate_partitions(static_cast<int>(n))) {
            const double weight = yb_boundary_kernel(omega, r_prime.get_d(), nu);
            if (weight == 0.0)
                continue;
            for (std::size_t k = 0; k < targets.size(); ++k)
                if (contains(targets[k], nu))
                    lhs[k] += weight * yb_link_entry(nu, targets[k], q).get_d();
        }
    }
    CoherenceReport report;
    report.cutoff_used = cutoff;
    for (std::size_t k = 0; k < targets.size(); ++k) {
        const double rhs = yb_boundary_kernel(omega, r.get_d(), targets[k]);
        report.items.push_back({vertex_label(targets[k]), lhs[k], rhs, std::abs(lhs[k] - rhs), tail});
    }
    return report;
}

namespace {

// Chernoff bound on P(|ν| > k) when E[u^{|ν|}] = Φ(u)^levels.
double size_tail_bound(const GTBoundaryPoint& point, int levels, long k)
{
    double alpha_max = 0.0;
    for (double a : point.plus.alpha)
        alpha_max = std::max(alpha_max, a);
    const double upper = alpha_max > 0.0 ? 1.0 + 1.0 / alpha_max : 64.0;
    double best = 1.0;
    for (int step = 1; step < 64; ++step) {
        const double radius = 1.0 + (upper - 1.0) * step / 64.0;
        const double log_bound = levels * std::log(gt_phi_generating(point, radius))
            - static_cast<double>(k + 1) * std::log(radius);
        best = std::min(best, std::exp(log_bound));
    }
    return best;
}

void enumerate_interlacing_above(const Signature& mu, long first_row_cap, const std::function<void(const Signature&)>& visit)
{
    const int n = mu.level();
    std::vector<long> nu(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n + 1) {
            visit(Signature(nu));
            return;
        }
        const long lo = i < n ? mu[static_cast<std::size_t>(i)] : 0;
        const long hi = i == 0 ? first_row_cap : mu[static_cast<std::size_t>(i) - 1];
        for (long v = lo; v <= hi; ++v) {
            nu[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

} // namespace

CoherenceReport verify_gt_coherence(const RealPoint& omega_plus, int level, int max_size, const TailBudget& budget)
{
    if (level < 1)
        throw InvalidInput("GT coherence requires level >= 1");
    GTBoundaryPoint point{omega_plus, RealPoint{}};
    point.validate();
    const PhiSeries phi = gt_phi(point, budget);
    long cutoff = max_size;
    while (size_tail_bound(point, level + 1, cutoff) > budget.epsilon) {
        if (++cutoff > budget.max_cutoff)
            throw TailBudgetError("GT coherence: size tail bound does not reach epsilon within the cutoff cap");
    }
    const double tail = size_tail_bound(point, level + 1, cutoff);
    CoherenceReport report;
    report.cutoff_used = cutoff;
    for (int m = 0; m <= max_size; ++m) {
        for (const auto& mu_shape : enumerate_partitions(m)) {
            if (mu_shape.length() > level)
                continue;
            const Signature mu(mu_shape, level);
            const double dim_mu = weyl_dim(mu).get_d();
            double lhs = 0.0;
            enumerate_interlacing_above(mu, cutoff, [&](const Signature& nu) {
                lhs += gt_boundary_kernel(phi, true, nu).value * dim_mu / weyl_dim(nu).get_d();
            });
            const double rhs = gt_boundary_kernel(phi, true, mu).value;
            report.items.push_back({mu_shape.to_string(), lhs, rhs, std::abs(lhs - rhs), tail + phi.tail_bound()});
        }
    }
    return report;
}

} // namespace bouquet
