#pragma once

#include "bouquet/boundary.hpp"
#include "bouquet/partitions.hpp"
#include "bouquet/scalar.hpp"

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>

namespace bouquet {

/// (z)_μ = Π over boxes (i, j) of μ of (z + j − i).
template <class S>
S pochhammer_mu(const S& z, const Partition& mu)
{
    S out(1);
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu.row(static_cast<std::size_t>(i)); ++j)
            out *= z + S(j - i);
    return out;
}

/// Rising factorial (x)_m = x(x+1)…(x+m−1).
template <class S>
S rising(const S& x, long m)
{
    S out(1);
    for (long k = 0; k < m; ++k)
        out *= x + S(static_cast<int>(k));
    return out;
}

enum class Series { principal, complementary, degenerate, inadmissible };

std::string to_string(Series s);

Series classify_admissible(const GaussianRational& z, const GaussianRational& z_prime);

struct ZParams {
    GaussianRational z;
    GaussianRational z_prime;

    Series series() const { return classify_admissible(z, z_prime); }
    /// c = zz′, real and positive for admissible couples.
    Rational c() const;
    /// Throws InvalidInput for inadmissible couples.
    void validate() const;
};

/// Exact negative binomial weight (1+r)^{−c}(c)_m/m!·(r/(1+r))^m; the value is rational only for integer c.
Rational neg_binom(const Rational& c, const Rational& r, long m);
double neg_binom(double c, double r, long m);

/// Upper bound on P(X > cutoff) for the negative binomial law with parameters (c, r).
double neg_binom_tail_bound(double c, double r, long cutoff);

/// Mᴮ_{r′}Λᴮ = Mᴮ_r at m = 0..max_m, truncated where the tail bound drops below epsilon.
CoherenceReport verify_neg_binom_coherence(double c, double r, double r_prime, long max_m, const TailBudget& budget);

using YMeasure = std::map<Partition, Rational, std::greater<Partition>>;

/// MY_m(μ) = (z)_μ(z′)_μ/(c)_m · dim²μ/m!, exact over Gaussian rationals.
YMeasure z_measure_level(const ZParams& zp, int m);

/// MYB_r(μ) evaluated in floating point with the combinatorial factor exact.
double z_measure(const ZParams& zp, double r, const Partition& mu);

/// MYB_r(μ) in exact arithmetic; requires c = zz′ to be an integer so that (1+r)^{−c} is rational.
Rational z_measure_exact(const ZParams& zp, const Rational& r, const Partition& mu);

/// Σ_{ν ∈ Y_n} MY_n(ν) Λʸ(ν, μ) = MY_m(μ) for all μ ∈ Y_m, exactly.
CoherenceReport verify_z_coherence(const ZParams& zp, int n, int m);

/// Truncated check of MYB_{r′}Λʸᴮ = MYB_r on |μ| ≤ max_size; the size law is negative binomial.
CoherenceReport verify_myb_coherence(const ZParams& zp, const Rational& r, const Rational& r_prime, int max_size,
                                     const TailBudget& budget);

/// Which of the three sets making up the zw admissibility domain contains a couple.
enum class CoupleSet { principal, complementary, integer, none };

struct CoupleMembership {
    CoupleSet set = CoupleSet::none;
    /// The integer m of the defining condition; meaningful for complementary and integer sets.
    long index = 0;
};

CoupleMembership classify_zw_couple(const GaussianRational& z, const GaussianRational& z_prime);

struct ZWParams {
    GaussianRational z;
    GaussianRational z_prime;
    GaussianRational w;
    GaussianRational w_prime;

    /// Throws InvalidInput outside the admissible domain.
    void validate() const;
    bool admissible() const;
};

/// C_N · Π_N(μ) · Dim²[μ, N] with every Γ factor evaluated directly.
double zw_measure(const ZWParams& p, const Signature& mu);

/// MGT_N(0^N) · Π̃_N(μ) · Dim²[μ, N]; Π̃ is a finite product of rational factors and is evaluated exactly.
double zw_measure_rewritten(const ZWParams& p, const Signature& mu);

/// MGT_N(0^N) from the general product.
double zw_zero_signature(const ZWParams& p, int level);

/// MGT_N(0^N) from the shortened product valid at w = 0.
double zw_zero_signature_w0(const ZWParams& p, int level);

/// Π̃_N(μ) as an exact Gaussian rational.
GaussianRational zw_pi_tilde(const ZWParams& p, const Signature& mu);

struct ZWNormalization {
    double sum = 0.0;
    /// Mass of the outermost shell max|μ_i| = K: an empirical tail proxy, not a bound.
    double last_shell = 0.0;
    double normalization_constant = 0.0;
    long cutoff = 0;
    long signatures = 0;
};

/// Σ MGT_N(μ) over signatures with max|μ_i| ≤ cutoff.
ZWNormalization zw_normalization(const ZWParams& p, int level, long cutoff);

/// MGT_{N+1}Λ^{N+1}_N = MGT_N on nonnegative signatures with |μ| ≤ max_size. With w = 0 the
/// measures live on nonnegative signatures; ν is truncated at ν₁ ≤ cutoff and the reported
/// tail is the empirical mass outside the truncation window.
CoherenceReport verify_zw_coherence(const ZWParams& p, int level, int max_size, long cutoff);

} // namespace bouquet
