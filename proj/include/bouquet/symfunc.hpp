#pragma once

#include "bouquet/partitions.hpp"
#include "bouquet/scalar.hpp"

#include <vector>

namespace bouquet {

/// A point ω = (α, β, δ) of the Thoma cone with finitely many nonzero α and β.
///
/// Only the nonzero entries are stored. γ = δ − Σα − Σβ is derived and must be
/// nonnegative; validate() checks ordering, signs and γ ≥ 0.
template <class S>
struct ThomaConePoint {
    std::vector<S> alpha;
    std::vector<S> beta;
    S delta{0};

    S gamma() const
    {
        S g = delta;
        for (const auto& a : alpha)
            g -= a;
        for (const auto& b : beta)
            g -= b;
        return g;
    }

    /// |ω| = δ.
    const S& norm() const { return delta; }

    ThomaConePoint scaled(const S& r) const
    {
        ThomaConePoint out = *this;
        for (auto& a : out.alpha)
            a *= r;
        for (auto& b : out.beta)
            b *= r;
        out.delta *= r;
        return out;
    }

    void validate() const;
    bool is_origin() const;
};

using ExactPoint = ThomaConePoint<Rational>;
using RealPoint = ThomaConePoint<double>;

RealPoint to_real(const ExactPoint& omega);

/// ω_λ = ((a_1..a_d), (b_1..b_d), |λ|) from the modified Frobenius coordinates.
ExactPoint omega_of(const Partition& lambda);

/// p_1(ω) = |ω|; p_k(ω) = Σα_i^k + (−1)^{k−1} Σβ_i^k for k ≥ 2.
template <class S>
S power_sum(int k, const ThomaConePoint<S>& omega);

/// h_0(ω) … h_n(ω) from the Newton recurrence n·h_n = Σ_k p_k h_{n−k}.
template <class S>
std::vector<S> complete_h_series(int n, const ThomaConePoint<S>& omega);

template <class S>
S complete_h(int n, const ThomaConePoint<S>& omega);

/// Jacobi–Trudi determinant det[h_{λ_i − i + j}(ω)].
template <class S>
S schur(const Partition& lambda, const ThomaConePoint<S>& omega);

/// det[h_{ν_i − μ_j − i + j}(ω)]; 0 unless μ ⊆ ν.
template <class S>
S skew_schur(const Partition& mu, const Partition& nu, const ThomaConePoint<S>& omega);

/// h_n(1^k) = C(n + k − 1, n); zero for n < 0.
BigInt h_principal(long n, long k);
/// S_λ(1^N).
BigInt schur_principal(const Partition& lambda, long n_vars);
/// S_{ν/μ}(1^K): semistandard skew tableaux of shape ν/μ with entries ≤ K.
BigInt skew_schur_principal(const Partition& mu, const Partition& nu, long n_vars);

extern template struct ThomaConePoint<Rational>;
extern template struct ThomaConePoint<double>;
extern template Rational power_sum(int, const ExactPoint&);
extern template double power_sum(int, const RealPoint&);
extern template std::vector<Rational> complete_h_series(int, const ExactPoint&);
extern template std::vector<double> complete_h_series(int, const RealPoint&);
extern template Rational complete_h(int, const ExactPoint&);
extern template double complete_h(int, const RealPoint&);
extern template Rational schur(const Partition&, const ExactPoint&);
extern template double schur(const Partition&, const RealPoint&);
extern template Rational skew_schur(const Partition&, const Partition&, const ExactPoint&);
extern template double skew_schur(const Partition&, const Partition&, const RealPoint&);

} // namespace bouquet
