#include "bouquet/links.hpp"

#include "bouquet/symfunc.hpp"

namespace bouquet {

namespace {

void require_ratio(const Rational& q)
{
    if (!(sgn(q) > 0 && q < 1))
        throw InvalidInput("link ratio q = r/r' must lie in (0, 1)");
}

Rational binomial_weight(long n, long m, const Rational& q)
{
    return Rational(rational_pow(Rational(1 - q), static_cast<unsigned long>(n - m))
                    * rational_pow(q, static_cast<unsigned long>(m)) * Rational(binomial(n, m)));
}

} // namespace

Rational rational_pow(const Rational& base, unsigned long exponent)
{
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    out.canonicalize();
    return out;
}

KernelRow<long> binom_link(long n, const Rational& q)
{
    return binom_link(n, Rational(1), q);
}

KernelRow<long> binom_link(long n, const Rational& r_from, const Rational& r_to)
{
    if (n < 0)
        throw InvalidInput("binom_link requires n >= 0");
    if (sgn(r_to) <= 0 || r_to >= r_from)
        throw InvalidInput("binom_link requires 0 < r < r'");
    const Rational q = r_to / r_from;
    require_ratio(q);
    KernelRow<long> row;
    row.source = n;
    row.level_from = r_from;
    row.level_to = r_to;
    for (long m = 0; m <= n; ++m)
        row.add(m, binomial_weight(n, m, q));
    return row;
}

KernelRow<Partition> young_link(const Partition& nu, int m)
{
    if (m < 0 || m > nu.size())
        throw InvalidInput("young_link requires 0 <= m <= |nu|");
    KernelRow<Partition> row;
    row.source = nu;
    row.level_from = nu.size();
    row.level_to = m;
    const BigInt dim_nu = dim_standard(nu);
    for (const auto& mu : subdiagrams(nu)) {
        if (mu.size() != m)
            continue;
        Rational p(dim_standard(mu) * dim_skew(mu, nu), dim_nu);
        p.canonicalize();
        row.add(mu, p);
    }
    return row;
}

KernelRow<Signature> gt_link(const Signature& nu, int level_to)
{
    const int level_from = nu.level();
    if (level_to < 1 || level_to >= level_from)
        throw InvalidInput("gt_link requires 1 <= N < N'");
    if (!nu.is_nonnegative())
        throw InvalidInput("gt_link is defined on nonnegative signatures only");
    const Partition top = nu.to_partition();
    KernelRow<Signature> row;
    row.source = nu;
    row.level_from = level_from;
    row.level_to = level_to;
    const BigInt dim_top = weyl_dim(nu);
    for (const auto& mu : subdiagrams(top, level_to)) {
        const BigInt relative = skew_schur_principal(mu, top, level_from - level_to);
        if (sgn(relative) == 0)
            continue;
        Rational p(weyl_dim(mu, level_to) * relative, dim_top);
        p.canonicalize();
        row.add(Signature(mu, level_to), p);
    }
    return row;
}

KernelRow<Partition> yb_link(const Partition& nu, const Rational& q)
{
    return yb_link(nu, Rational(1), q);
}

KernelRow<Partition> yb_link(const Partition& nu, const Rational& r_from, const Rational& r_to)
{
    if (sgn(r_to) <= 0 || r_to >= r_from)
        throw InvalidInput("yb_link requires 0 < r < r'");
    const Rational q = r_to / r_from;
    require_ratio(q);
    KernelRow<Partition> row;
    row.source = nu;
    row.level_from = r_from;
    row.level_to = r_to;
    const long n = nu.size();
    for (long m = 0; m <= n; ++m) {
        const Rational size_weight = binomial_weight(n, m, q);
        for (const auto& [mu, p] : young_link(nu, static_cast<int>(m)).entries)
            row.add(mu, Rational(size_weight * p));
    }
    return row;
}

Rational young_link_entry(const Partition& nu, const Partition& mu)
{
    if (!contains(mu, nu))
        return 0;
    Rational p(dim_standard(mu) * dim_skew(mu, nu), dim_standard(nu));
    p.canonicalize();
    return p;
}

Rational yb_link_entry(const Partition& nu, const Partition& mu, const Rational& q)
{
    require_ratio(q);
    if (!contains(mu, nu))
        return 0;
    return Rational(binomial_weight(nu.size(), mu.size(), q) * young_link_entry(nu, mu));
}

KernelRow<PascalVertex> pascal_link(const PascalVertex& v)
{
    if (v.n1 < 0 || v.n2 < 0)
        throw InvalidInput("pascal vertex coordinates must be nonnegative");
    if (v.level() < 1)
        throw InvalidInput("pascal_link requires n1 + n2 >= 1");
    KernelRow<PascalVertex> row;
    row.source = v;
    row.level_from = v.level();
    row.level_to = v.level() - 1;
    if (v.n1 > 0)
        row.add({v.n1 - 1, v.n2}, Rational(v.n1, v.level()));
    if (v.n2 > 0)
        row.add({v.n1, v.n2 - 1}, Rational(v.n2, v.level()));
    for (auto& [u, p] : row.entries)
        p.canonicalize();
    return row;
}

} // namespace bouquet
