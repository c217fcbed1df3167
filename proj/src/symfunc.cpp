#include "bouquet/symfunc.hpp"

#include "bouquet/determinant.hpp"

#include <cmath>
#include <string>
#include <type_traits>

namespace bouquet {

namespace {

int signum(const Rational& q) { return sgn(q); }
int signum(double x) { return (x > 0) - (x < 0); }

template <class S>
S int_power(const S& base, int k)
{
    S out(1);
    for (int i = 0; i < k; ++i)
        out *= base;
    return out;
}

template <class S>
void check_sequence(const std::vector<S>& xs, const char* name)
{
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (signum(xs[i]) < 0)
            throw InvalidInput(std::string("Thoma point: negative ") + name + " entry");
        if (i > 0 && xs[i] > xs[i - 1])
            throw InvalidInput(std::string("Thoma point: ") + name + " must be weakly decreasing");
    }
}

template <class S>
S jacobi_trudi(const std::vector<S>& h, const Partition& mu, const Partition& nu)
{
    const int l = nu.length();
    SquareMatrix<S> m(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
            const int k = nu.row(static_cast<std::size_t>(i)) - mu.row(static_cast<std::size_t>(j)) - i + j;
            if (k >= 0)
                m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = h[static_cast<std::size_t>(k)];
        }
    }
    return determinant(std::move(m));
}

} // namespace

template <class S>
void ThomaConePoint<S>::validate() const
{
    check_sequence(alpha, "alpha");
    check_sequence(beta, "beta");
    if (signum(delta) < 0)
        throw InvalidInput("Thoma point: delta must be nonnegative");
    const S g = gamma();
    if constexpr (std::is_same_v<S, double>) {
        if (g < -1e-12 * (1.0 + std::abs(delta)))
            throw InvalidInput("Thoma point: sum(alpha) + sum(beta) exceeds delta");
    } else {
        if (signum(g) < 0)
            throw InvalidInput("Thoma point: sum(alpha) + sum(beta) exceeds delta");
    }
}

template <class S>
bool ThomaConePoint<S>::is_origin() const
{
    return signum(delta) == 0;
}

template struct ThomaConePoint<Rational>;
template struct ThomaConePoint<double>;

RealPoint to_real(const ExactPoint& omega)
{
    RealPoint out;
    for (const auto& a : omega.alpha)
        out.alpha.push_back(a.get_d());
    for (const auto& b : omega.beta)
        out.beta.push_back(b.get_d());
    out.delta = omega.delta.get_d();
    return out;
}

ExactPoint omega_of(const Partition& lambda)
{
    const FrobeniusCoords f = frobenius(lambda);
    ExactPoint out;
    for (int i = 0; i < f.rank(); ++i) {
        out.alpha.push_back(f.a(static_cast<std::size_t>(i)));
        out.beta.push_back(f.b(static_cast<std::size_t>(i)));
    }
    out.delta = lambda.size();
    return out;
}

template <class S>
S power_sum(int k, const ThomaConePoint<S>& omega)
{
    if (k < 1)
        throw InvalidInput("power_sum requires k >= 1");
    if (k == 1)
        return omega.delta;
    S out(0);
    for (const auto& a : omega.alpha)
        out += int_power(a, k);
    S b_part(0);
    for (const auto& b : omega.beta)
        b_part += int_power(b, k);
    if (k % 2 == 0)
        out -= b_part;
    else
        out += b_part;
    return out;
}

template <class S>
std::vector<S> complete_h_series(int n, const ThomaConePoint<S>& omega)
{
    if (n < 0)
        return {S(1)};
    std::vector<S> p(static_cast<std::size_t>(n) + 1, S(0));
    for (int k = 1; k <= n; ++k)
        p[static_cast<std::size_t>(k)] = power_sum(k, omega);
    std::vector<S> h(static_cast<std::size_t>(n) + 1, S(0));
    h[0] = S(1);
    for (int m = 1; m <= n; ++m) {
        S acc(0);
        for (int k = 1; k <= m; ++k)
            acc += p[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(m - k)];
        h[static_cast<std::size_t>(m)] = acc / S(m);
    }
    return h;
}

template <class S>
S complete_h(int n, const ThomaConePoint<S>& omega)
{
    if (n < 0)
        return S(0);
    return complete_h_series(n, omega)[static_cast<std::size_t>(n)];
}

template <class S>
S schur(const Partition& lambda, const ThomaConePoint<S>& omega)
{
    return skew_schur(Partition{}, lambda, omega);
}

template <class S>
S skew_schur(const Partition& mu, const Partition& nu, const ThomaConePoint<S>& omega)
{
    if (!contains(mu, nu))
        return S(0);
    const int max_degree = nu.row(0) + nu.length();
    const std::vector<S> h = complete_h_series(max_degree, omega);
    return jacobi_trudi(h, mu, nu);
}

template Rational power_sum(int, const ExactPoint&);
template double power_sum(int, const RealPoint&);
template std::vector<Rational> complete_h_series(int, const ExactPoint&);
template std::vector<double> complete_h_series(int, const RealPoint&);
template Rational complete_h(int, const ExactPoint&);
template double complete_h(int, const RealPoint&);
template Rational schur(const Partition&, const ExactPoint&);
template double schur(const Partition&, const RealPoint&);
template Rational skew_schur(const Partition&, const Partition&, const ExactPoint&);
template double skew_schur(const Partition&, const Partition&, const RealPoint&);

BigInt h_principal(long n, long k)
{
    if (n < 0)
        return 0;
    if (n == 0)
        return 1;
    if (k <= 0)
        return 0;
    return binomial(n + k - 1, n);
}

BigInt schur_principal(const Partition& lambda, long n_vars)
{
    return skew_schur_principal(Partition{}, lambda, n_vars);
}

BigInt skew_schur_principal(const Partition& mu, const Partition& nu, long n_vars)
{
    if (!contains(mu, nu))
        return 0;
    const int l = nu.length();
    SquareMatrix<BigInt> m(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = h_principal(
                nu.row(static_cast<std::size_t>(i)) - mu.row(static_cast<std::size_t>(j)) - i + j, n_vars);
    return determinant(std::move(m));
}

} // namespace bouquet
