#pragma once

#include "bouquet/partitions.hpp"
#include "bouquet/symfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace bouquet {

/// Truncation policy shared by every verifier that sums an infinite level.
struct TailBudget {
    double epsilon = 1e-9;
    int initial_degree = 32;
    /// Hard cap for the φ-series degree; exceeding it raises TailBudgetError.
    int max_degree = 512;
    /// Hard cap for level cutoffs in truncated coherence sums.
    long max_cutoff = 200;

    void validate() const;
};

/// A pair (ω⁺, ω⁻) of Thoma cone points with β⁺₁ + β⁻₁ ≤ 1.
struct GTBoundaryPoint {
    RealPoint plus;
    RealPoint minus;

    void validate() const;
};

/// Requested boundary points have some β±_i = 1; the modified-parameter expansion needs β < 1.
class UnsupportedBoundaryPoint : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// e^{−rx}(rx)^m/m!.
double poisson_kernel(double x, double r, long m);

/// Upper bound on P(X > cutoff) for X ~ Poisson(mean); 1 when no geometric bound applies yet.
double poisson_tail_bound(double mean, long cutoff);

/// Smallest cutoff whose Poisson tail bound is at most epsilon; TailBudgetError past budget.max_cutoff.
long poisson_cutoff(double mean, const TailBudget& budget);

/// dim μ · S_μ(ω̂) on the Thoma simplex (δ = 1); exact for rational points.
Rational young_boundary_kernel(const ExactPoint& omega_hat, const Partition& mu);
double young_boundary_kernel(const RealPoint& omega_hat, const Partition& mu);

/// e^{−r|ω|} r^{|μ|}/|μ|! · dim μ · S_μ(ω); the combinatorial factor is evaluated exactly.
double yb_boundary_kernel(const ExactPoint& omega, double r, const Partition& mu);
double yb_boundary_kernel(const RealPoint& omega, double r, const Partition& mu);

/// Laurent coefficients φ_n of Φ(u; ω⁺, ω⁻) = A(u)·B(1/u).
///
/// A and B are the one-sided factors written with the modified parameters
/// α̃ = α/(1+α), β̃ = β/(1−β); both have nonnegative Taylor coefficients
/// summing to 1, so truncating each at `degree` misses at most its tail
/// mass, and every φ_n is off by at most `tail_bound`.
class PhiSeries {
public:
    PhiSeries(std::vector<double> plus_coeffs, std::vector<double> minus_coeffs, double tail_bound);

    double coefficient(long n) const;
    double operator()(long n) const { return coefficient(n); }
    int degree() const { return static_cast<int>(plus_.size()) - 1; }
    double tail_bound() const { return tail_bound_; }
    const std::vector<double>& plus_coefficients() const { return plus_; }

private:
    std::vector<double> plus_;
    std::vector<double> minus_;
    double tail_bound_;
};

PhiSeries gt_phi(const GTBoundaryPoint& point, const TailBudget& budget);
std::map<long, double> gt_phi(const GTBoundaryPoint& point, long first, long last, const TailBudget& budget);

/// Φ(u) for real u where the product converges (used for size tail bounds).
double gt_phi_generating(const GTBoundaryPoint& point, double u);

enum class DeterminantRoute { automatic, full, collapsed };

struct BoundaryValue {
    double value = 0.0;
    double tail_bound = 0.0;
    long cutoff_used = 0;
};

/// Dim[μ, N] · det[φ_{μ_i − i + j}]_{i,j ≤ N}. With ω⁻ = 0 the automatic route
/// uses the ℓ(μ) × ℓ(μ) minor times φ_0^{N − ℓ}.
BoundaryValue gt_boundary_kernel(const GTBoundaryPoint& point, const Signature& mu, const TailBudget& budget,
                                 DeterminantRoute route = DeterminantRoute::automatic);
BoundaryValue gt_boundary_kernel(const PhiSeries& phi, bool minus_is_origin, const Signature& mu,
                                 DeterminantRoute route = DeterminantRoute::automatic);

/// One line of a coherence verification: lhs is the truncated pushforward, rhs the direct kernel.
struct CoherenceItem {
    std::string vertex;
    double lhs = 0.0;
    double rhs = 0.0;
    double discrepancy = 0.0;
    double tail_bound = 0.0;
};

struct CoherenceReport {
    std::vector<CoherenceItem> items;
    long cutoff_used = 0;
    /// True when the verification was an exact rational identity.
    bool exact = false;
    bool exact_equal = false;

    double max_discrepancy() const;
    double max_tail_bound() const;
    bool passed(double tolerance) const;
};

/// Σ_{ν ∈ Y_{m+1}} Λʸ∞(ω̂, ν) Λʸ(ν, μ) = Λʸ∞(ω̂, μ) for every μ ∈ Y_m, in exact arithmetic.
CoherenceReport verify_young_coherence(const ExactPoint& omega_hat, int level);

/// Λᴮ∞_{r′} Λᴮ = Λᴮ∞_r at m = 0..max_m, truncated at a certified Poisson cutoff.
CoherenceReport verify_binomial_coherence(double x, double r, double r_prime, long max_m, const TailBudget& budget);

/// Λʸᴮ∞_{r′} Λʸᴮ = Λʸᴮ∞_r on all μ with |μ| ≤ max_size.
CoherenceReport verify_yb_coherence(const ExactPoint& omega, const Rational& r, const Rational& r_prime,
                                    int max_size, const TailBudget& budget);

/// Λᴳᵀ∞_{N+1} Λ^{N+1}_N = Λᴳᵀ∞_N at ω⁻ = 0 for μ ∈ GT⁺_N with |μ| ≤ max_size; ν₁ truncated
/// where the Chernoff bound on |ν| under Φ(u)^{N+1} drops below epsilon.
CoherenceReport verify_gt_coherence(const RealPoint& omega_plus, int level, int max_size, const TailBudget& budget);

} // namespace bouquet
