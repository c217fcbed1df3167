#include "bouquet/measures.hpp"

#include "bouquet/links.hpp"
#include "bouquet/special_functions.hpp"

#include <algorithm>
#include <cmath>

namespace bouquet {

namespace {

double log_factorial(double m)
{
    int sign = 0;
    return lgamma_r(m + 1.0, &sign);
}

BigInt floor_of(const Rational& q)
{
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

GaussianRational inverse(const GaussianRational& x)
{
    const Rational n = x.norm();
    if (sgn(n) == 0)
        throw PoleError("reciprocal of zero in a Gamma ratio");
    return {Rational(x.re / n), Rational(-x.im / n)};
}

GaussianRational gauss(long v) { return GaussianRational(Rational(v)); }

// Γ(a) / Γ(a − m) for integer m as a finite product.
GaussianRational gamma_ratio_down(const GaussianRational& a, long m)
{
    if (m >= 0)
        return rising(a - gauss(m), m);
    return inverse(rising(a, -m));
}

// Γ(b) / Γ(b + m) for integer m as a finite product.
GaussianRational gamma_ratio_up(const GaussianRational& b, long m)
{
    if (m >= 0)
        return inverse(rising(b, m));
    return rising(b + gauss(m), -m);
}

Rational my_weight(const ZParams& zp, const Partition& mu)
{
    const GaussianRational prod = pochhammer_mu(zp.z, mu) * pochhammer_mu(zp.z_prime, mu);
    const long m = mu.size();
    const BigInt d = dim_standard(mu);
    Rational out = prod.re * Rational(d * d) / (rising(zp.c(), m) * Rational(factorial(static_cast<unsigned long>(m))));
    out.canonicalize();
    return out;
}

long binomial_cutoff(double c, double r, long floor_value, const TailBudget& budget)
{
    for (long k = floor_value; k <= budget.max_cutoff; ++k)
        if (neg_binom_tail_bound(c, r, k) <= budget.epsilon)
            return k;
    throw TailBudgetError("negative binomial tail bound does not reach epsilon within the cutoff cap");
}

void enumerate_signatures(int level, long low, long high, const std::function<void(const Signature&)>& visit)
{
    std::vector<long> coords(static_cast<std::size_t>(level));
    std::function<void(int, long)> rec = [&](int i, long cap) {
        if (i == level) {
            visit(Signature(coords));
            return;
        }
        for (long v = cap; v >= low; --v) {
            coords[static_cast<std::size_t>(i)] = v;
            rec(i + 1, v);
        }
    };
    rec(0, high);
}

void enumerate_interlacing_above(const Signature& mu, long low, long high,
                                 const std::function<void(const Signature&)>& visit)
{
    const int n = mu.level();
    std::vector<long> nu(static_cast<std::size_t>(n) + 1);
    std::function<void(int)> rec = [&](int i) {
        if (i == n + 1) {
            visit(Signature(nu));
            return;
        }
        const long lo = i < n ? mu[static_cast<std::size_t>(i)] : low;
        const long hi = i == 0 ? high : mu[static_cast<std::size_t>(i) - 1];
        for (long v = lo; v <= hi; ++v) {
            nu[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

} // namespace

std::string to_string(Series s)
{
    switch (s) {
    case Series::principal:
        return "principal";
    case Series::complementary:
        return "complementary";
    case Series::degenerate:
        return "degenerate";
    case Series::inadmissible:
        return "inadmissible";
    }
    return "inadmissible";
}

Series classify_admissible(const GaussianRational& z, const GaussianRational& z_prime)
{
    if (z == GaussianRational{} || z_prime == GaussianRational{})
        return Series::inadmissible;
    if (!z.is_real() || !z_prime.is_real())
        return z_prime == z.conj() ? Series::principal : Series::inadmissible;
    const Rational& a = z.re;
    const Rational& b = z_prime.re;
    if (!is_integer(a) && !is_integer(b) && floor_of(a) == floor_of(b))
        return Series::complementary;
    // (k, k + b − 1) with k ≥ 1, b > 0, and its images under swap and negation.
    auto degenerate = [](const Rational& k, const Rational& other) {
        return is_integer(k) && k >= 1 && other > k - 1;
    };
    if (degenerate(a, b) || degenerate(b, a) || degenerate(Rational(-a), Rational(-b))
        || degenerate(Rational(-b), Rational(-a)))
        return Series::degenerate;
    return Series::inadmissible;
}

Rational ZParams::c() const
{
    return (z * z_prime).re;
}

void ZParams::validate() const
{
    if (series() == Series::inadmissible)
        throw InvalidInput("z-measure parameters (" + to_string(z) + ", " + to_string(z_prime) + ") are not admissible");
}

Rational neg_binom(const Rational& c, const Rational& r, long m)
{
    if (sgn(c) <= 0 || sgn(r) <= 0 || m < 0)
        throw InvalidInput("neg_binom requires c > 0, r > 0, m >= 0");
    if (!is_integer(c))
        throw InvalidInput("exact neg_binom requires an integer c; use the floating-point overload");
    const Rational one_plus_r = 1 + r;
    const Rational p = r / one_plus_r;
    Rational out = rational_pow(Rational(1 / one_plus_r), c.get_num().get_ui()) * rising(c, m)
        / Rational(factorial(static_cast<unsigned long>(m))) * rational_pow(p, static_cast<unsigned long>(m));
    out.canonicalize();
    return out;
}

double neg_binom(double c, double r, long m)
{
    if (!(c > 0.0) || !(r > 0.0) || m < 0)
        throw InvalidInput("neg_binom requires c > 0, r > 0, m >= 0");
    int sign = 0;
    const double md = static_cast<double>(m);
    const double log_value = -c * std::log1p(r) + lgamma_r(c + md, &sign) - lgamma_r(c, &sign) - log_factorial(md)
        + md * (std::log(r) - std::log1p(r));
    return std::exp(log_value);
}

double neg_binom_tail_bound(double c, double r, long cutoff)
{
    const double p = r / (1.0 + r);
    // t_{n+1}/t_n = p (c + n)/(n + 1) ≤ ρ for every n > cutoff.
    const double rho = p * std::max(1.0, (c + cutoff + 1.0) / (cutoff + 2.0));
    if (rho >= 1.0)
        return 1.0;
    return std::min(1.0, neg_binom(c, r, cutoff + 1) / (1.0 - rho));
}

CoherenceReport verify_neg_binom_coherence(double c, double r, double r_prime, long max_m, const TailBudget& budget)
{
    if (!(c > 0.0) || !(r > 0.0) || !(r_prime > r))
        throw InvalidInput("negative binomial coherence requires c > 0 and 0 < r < r'");
    budget.validate();
    const long cutoff = binomial_cutoff(c, r_prime, max_m, budget);
    const double q = r / r_prime;
    CoherenceReport report;
    report.cutoff_used = cutoff;
    const double tail = neg_binom_tail_bound(c, r_prime, cutoff);
    for (long m = 0; m <= max_m; ++m) {
        double lhs = 0.0;
        for (long n = m; n <= cutoff; ++n) {
            const double log_binom = log_factorial(static_cast<double>(n)) - log_factorial(static_cast<double>(m))
                - log_factorial(static_cast<double>(n - m)) + static_cast<double>(m) * std::log(q)
                + static_cast<double>(n - m) * std::log1p(-q);
            lhs += neg_binom(c, r_prime, n) * std::exp(log_binom);
        }
        const double rhs = neg_binom(c, r, m);
        report.items.push_back({std::to_string(m), lhs, rhs, std::abs(lhs - rhs), tail});
    }
    return report;
}

YMeasure z_measure_level(const ZParams& zp, int m)
{
    zp.validate();
    if (m < 0)
        throw InvalidInput("z_measure_level requires m >= 0");
    YMeasure out;
    for (const auto& mu : enumerate_partitions(m))
        out.emplace(mu, my_weight(zp, mu));
    return out;
}

double z_measure(const ZParams& zp, double r, const Partition& mu)
{
    zp.validate();
    if (!(r > 0.0))
        throw InvalidInput("z_measure requires r > 0");
    return neg_binom(zp.c().get_d(), r, mu.size()) * my_weight(zp, mu).get_d();
}

Rational z_measure_exact(const ZParams& zp, const Rational& r, const Partition& mu)
{
    zp.validate();
    if (sgn(r) <= 0)
        throw InvalidInput("z_measure requires r > 0");
    return Rational(neg_binom(zp.c(), r, mu.size()) * my_weight(zp, mu));
}

CoherenceReport verify_z_coherence(const ZParams& zp, int n, int m)
{
    if (m < 0 || m > n)
        throw InvalidInput("z coherence requires 0 <= m <= n");
    const YMeasure upper = z_measure_level(zp, n);
    CoherenceReport report;
    report.exact = true;
    report.exact_equal = true;
    report.cutoff_used = n;
    for (const auto& [mu, rhs] : z_measure_level(zp, m)) {
        Rational lhs = 0;
        for (const auto& [nu, p] : upper)
            lhs += p * young_link_entry(nu, mu);
        const bool equal = lhs == rhs;
        report.exact_equal = report.exact_equal && equal;
        report.items.push_back({mu.to_string(), lhs.get_d(), rhs.get_d(), Rational(abs(lhs - rhs)).get_d(), 0.0});
    }
    return report;
}

CoherenceReport verify_myb_coherence(const ZParams& zp, const Rational& r, const Rational& r_prime, int max_size,
                                     const TailBudget& budget)
{
    zp.validate();
    budget.validate();
    if (sgn(r) <= 0 || r_prime <= r)
        throw InvalidInput("MYB coherence requires 0 < r < r'");
    const double c = zp.c().get_d();
    const double rp = r_prime.get_d();
    const double q = Rational(r / r_prime).get_d();
    const long cutoff = binomial_cutoff(c, rp, max_size, budget);

    std::map<Partition, double> dims;
    auto dim_of = [&](const Partition& p) {
        auto it = dims.find(p);
        if (it == dims.end())
            it = dims.emplace(p, dim_standard(p).get_d()).first;
        return it->second;
    };
    std::map<Partition, double> lhs;
    for (long n = 0; n <= cutoff; ++n) {
        // MYB_{r'} restricted to Y_n, pushed down one box at a time; Λʸ from n to k is the
        // product of one-step links, and the binomial factor selects the target level.
        std::map<Partition, double> level;
        for (const auto& nu : enumerate_partitions(static_cast<int>(n)))
            level[nu] = z_measure(zp, rp, nu);
        for (long k = n; k >= 0; --k) {
            if (k <= max_size) {
                const double log_binom = log_factorial(static_cast<double>(n)) - log_factorial(static_cast<double>(k))
                    - log_factorial(static_cast<double>(n - k)) + static_cast<double>(k) * std::log(q)
                    + static_cast<double>(n - k) * std::log1p(-q);
                const double weight = std::exp(log_binom);
                for (const auto& [mu, p] : level)
                    lhs[mu] += weight * p;
            }
            if (k == 0)
                break;
            std::map<Partition, double> below;
            for (const auto& [nu, p] : level) {
                const double d = dim_of(nu);
                for (const auto& lambda : nu.remove_one_box())
                    below[lambda] += p * dim_of(lambda) / d;
            }
            level = std::move(below);
        }
    }
    CoherenceReport report;
    report.cutoff_used = cutoff;
    const double tail = neg_binom_tail_bound(c, rp, cutoff);
    for (int m = 0; m <= max_size; ++m) {
        for (const auto& mu : enumerate_partitions(m)) {
            const double rhs = z_measure(zp, r.get_d(), mu);
            const double value = lhs[mu];
            report.items.push_back({mu.to_string(), value, rhs, std::abs(value - rhs), tail});
        }
    }
    return report;
}

CoupleMembership classify_zw_couple(const GaussianRational& z, const GaussianRational& z_prime)
{
    if (!z.is_real() || !z_prime.is_real()) {
        if (z_prime == z.conj())
            return {CoupleSet::principal, 0};
        return {};
    }
    const Rational& a = z.re;
    const Rational& b = z_prime.re;
    if (!is_integer(a) && !is_integer(b) && floor_of(a) == floor_of(b))
        return {CoupleSet::complementary, floor_of(a).get_si()};
    std::optional<long> index;
    if (is_integer(a) && b > a - 1)
        index = a.get_num().get_si();
    if (is_integer(b) && a > b - 1)
        index = std::max(index.value_or(b.get_num().get_si()), b.get_num().get_si());
    if (index)
        return {CoupleSet::integer, *index};
    return {};
}

bool ZWParams::admissible() const
{
    const CoupleMembership first = classify_zw_couple(z, z_prime);
    const CoupleMembership second = classify_zw_couple(w, w_prime);
    if (first.set == CoupleSet::none || second.set == CoupleSet::none)
        return false;
    const GaussianRational total = z + z_prime + w + w_prime;
    if (!total.is_real() || !(total.re > -1))
        return false;
    if (first.set == CoupleSet::integer && second.set == CoupleSet::integer && first.index + second.index < 1)
        return false;
    return true;
}

void ZWParams::validate() const
{
    if (!admissible())
        throw InvalidInput("zw parameters (" + to_string(z) + ", " + to_string(z_prime) + ", " + to_string(w) + ", "
                           + to_string(w_prime) + ") are outside the admissible domain");
}

double zw_measure(const ZWParams& p, const Signature& mu)
{
    p.validate();
    const long n = mu.level();
    const GaussianRational total = p.z + p.z_prime + p.w + p.w_prime;
    GammaProduct g;
    for (long i = 1; i <= n; ++i) {
        const GaussianRational gi = gauss(i);
        g.multiply(p.z + p.w + gi);
        g.multiply(p.z + p.w_prime + gi);
        g.multiply(p.z_prime + p.w + gi);
        g.multiply(p.z_prime + p.w_prime + gi);
        g.multiply(gi);
        g.divide(total + gi);
        const long m = mu[static_cast<std::size_t>(i - 1)];
        g.divide(p.z - gauss(m) + gi);
        g.divide(p.z_prime - gauss(m) + gi);
        g.divide(p.w + gauss(n + 1 + m - i));
        g.divide(p.w_prime + gauss(n + 1 + m - i));
    }
    if (g.is_zero())
        return 0.0;
    const double dim = weyl_dim(mu).get_d();
    return g.real_value() * dim * dim;
}

double zw_zero_signature(const ZWParams& p, int level)
{
    p.validate();
    if (level < 1)
        throw InvalidInput("level must be at least 1");
    const GaussianRational total = p.z + p.z_prime + p.w + p.w_prime;
    GammaProduct g;
    for (long i = 1; i <= level; ++i) {
        const GaussianRational gi = gauss(i);
        g.multiply(p.z + p.w + gi);
        g.multiply(p.z + p.w_prime + gi);
        g.multiply(p.z_prime + p.w + gi);
        g.multiply(p.z_prime + p.w_prime + gi);
        g.multiply(gi);
        g.divide(total + gi);
        g.divide(p.z + gi);
        g.divide(p.z_prime + gi);
        g.divide(p.w + gi);
        g.divide(p.w_prime + gi);
    }
    return g.real_value();
}

double zw_zero_signature_w0(const ZWParams& p, int level)
{
    p.validate();
    if (!(p.w == GaussianRational{}))
        throw InvalidInput("the shortened zero-signature product requires w = 0");
    if (level < 1)
        throw InvalidInput("level must be at least 1");
    GammaProduct g;
    for (long i = 1; i <= level; ++i) {
        const GaussianRational gi = gauss(i);
        g.multiply(p.z + p.w_prime + gi);
        g.multiply(p.z_prime + p.w_prime + gi);
        g.divide(p.z + p.z_prime + p.w_prime + gi);
        g.divide(p.w_prime + gi);
    }
    return g.real_value();
}

GaussianRational zw_pi_tilde(const ZWParams& p, const Signature& mu)
{
    const long n = mu.level();
    GaussianRational out(1);
    for (long i = 1; i <= n; ++i) {
        const long m = mu[static_cast<std::size_t>(i - 1)];
        if (m == 0)
            continue;
        const GaussianRational gi = gauss(i);
        out *= gamma_ratio_down(p.z + gi, m);
        out *= gamma_ratio_down(p.z_prime + gi, m);
        out *= gamma_ratio_up(p.w + gauss(n + 1 - i), m);
        out *= gamma_ratio_up(p.w_prime + gauss(n + 1 - i), m);
        if (out == GaussianRational{})
            return out;
    }
    return out;
}

double zw_measure_rewritten(const ZWParams& p, const Signature& mu)
{
    p.validate();
    const GaussianRational tilde = zw_pi_tilde(p, mu);
    if (tilde == GaussianRational{})
        return 0.0;
    const double zero = p.w == GaussianRational{} ? zw_zero_signature_w0(p, mu.level()) : zw_zero_signature(p, mu.level());
    const BigInt dim = weyl_dim(mu);
    return zero * Rational(tilde.re * Rational(dim * dim)).get_d();
}

ZWNormalization zw_normalization(const ZWParams& p, int level, long cutoff)
{
    p.validate();
    if (level < 1 || cutoff < 0)
        throw InvalidInput("zw_normalization requires level >= 1 and cutoff >= 0");
    ZWNormalization out;
    out.cutoff = cutoff;
    const GaussianRational total = p.z + p.z_prime + p.w + p.w_prime;
    GammaProduct c;
    for (long i = 1; i <= level; ++i) {
        const GaussianRational gi = gauss(i);
        c.multiply(p.z + p.w + gi);
        c.multiply(p.z + p.w_prime + gi);
        c.multiply(p.z_prime + p.w + gi);
        c.multiply(p.z_prime + p.w_prime + gi);
        c.multiply(gi);
        c.divide(total + gi);
    }
    out.normalization_constant = c.real_value();
    enumerate_signatures(level, -cutoff, cutoff, [&](const Signature& mu) {
        const double v = zw_measure(p, mu);
        out.sum += v;
        ++out.signatures;
        if (std::max(std::abs(mu[0]), std::abs(mu[static_cast<std::size_t>(level) - 1])) == cutoff)
            out.last_shell += v;
    });
    return out;
}

CoherenceReport verify_zw_coherence(const ZWParams& p, int level, int max_size, long cutoff)
{
    p.validate();
    if (level < 1 || max_size < 0 || cutoff < max_size)
        throw InvalidInput("zw coherence requires level >= 1 and cutoff >= max_size >= 0");
    const bool nonnegative = p.w == GaussianRational{} || p.w_prime == GaussianRational{};
    const long low = nonnegative ? 0 : -cutoff;

    std::vector<Signature> targets;
    if (nonnegative) {
        for (int m = 0; m <= max_size; ++m)
            for (const auto& shape : enumerate_partitions(m))
                if (shape.length() <= level)
                    targets.emplace_back(shape, level);
    } else {
        enumerate_signatures(level, -max_size, max_size, [&](const Signature& mu) { targets.push_back(mu); });
    }

    double window_mass = 0.0;
    enumerate_signatures(level + 1, low, cutoff, [&](const Signature& nu) { window_mass += zw_measure(p, nu); });
    const double tail = std::max(0.0, 1.0 - window_mass);

    CoherenceReport report;
    report.cutoff_used = cutoff;
    for (const auto& mu : targets) {
        const double dim_mu = weyl_dim(mu).get_d();
        double lhs = 0.0;
        enumerate_interlacing_above(mu, low, cutoff, [&](const Signature& nu) {
            lhs += zw_measure(p, nu) * dim_mu / weyl_dim(nu).get_d();
        });
        const double rhs = zw_measure(p, mu);
        std::string label = "[";
        for (int i = 0; i < level; ++i)
            label += (i ? "," : "") + std::to_string(mu[static_cast<std::size_t>(i)]);
        report.items.push_back({label + "]", lhs, rhs, std::abs(lhs - rhs), tail});
    }
    return report;
}

} // namespace bouquet
