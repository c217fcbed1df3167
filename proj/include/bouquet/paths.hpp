#pragma once

#include "bouquet/boundary.hpp"
#include "bouquet/links.hpp"
#include "bouquet/partitions.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace bouquet {

/// Seeded stream: mt19937_64 with 53-bit uniforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform on (0, 1].
    double uniform();
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// Seed of replica `index` of an ensemble: splitmix64(seed ^ (index · 0x9E3779B97F4A7C15)).
std::uint64_t replica_seed(std::uint64_t seed, std::uint64_t index);

/// Poisson(mean) by counting unit-rate exponential arrivals in [0, mean].
long sample_poisson(Rng& rng, double mean);

struct JumpPath {
    double horizon = 1.0;
    std::vector<double> jumps;

    /// m(t): number of jumps in (0, t].
    long count_at(double t) const;
    void validate() const;
};

/// A diagram filled with positive reals increasing along rows and down columns.
struct GeneralizedTableau {
    Partition shape;
    std::vector<std::vector<double>> fill;
    double horizon = 1.0;

    /// The diagram of boxes whose entries are ≤ t.
    Partition shape_at(double t) const;
    void validate() const;
};

struct StandardTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const;
    void validate() const;
    friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

struct SSYT {
    std::vector<std::vector<int>> rows;
    int max_entry = 1;

    Partition shape() const;
    void validate() const;
    friend auto operator<=>(const SSYT&, const SSYT&) = default;
    friend bool operator==(const SSYT&, const SSYT&) = default;
};

/// rows[k] is the level-(k+1) signature; consecutive rows interlace.
struct GTScheme {
    std::vector<std::vector<long>> rows;

    void validate() const;
    /// Entry k fills the horizontal strip rows[k] / rows[k−1].
    SSYT to_ssyt() const;
};

JumpPath sample_poisson_path(double x, double r, std::uint64_t seed);
JumpPath sample_poisson_path(double x, double r, Rng& rng);

/// Uniform standard tableau via the downward chain of one-step Young links.
class StandardTableauSampler {
public:
    explicit StandardTableauSampler(Partition shape);
    StandardTableau sample(Rng& rng);
    /// Probability the chain assigns to a given tableau: the product of one-step link entries.
    Rational probability(const StandardTableau& t);

private:
    const BigInt& dim(const Partition& p);
    Partition shape_;
    std::map<Partition, BigInt> dims_;
};

StandardTableau sample_standard_tableau(const Partition& shape, std::uint64_t seed);

/// Uniform SSYT of a shape with entries ≤ N via the downward chain of one-step GT links.
/// States are stored truncated to the first ℓ(λ) coordinates, which are the only nonzero ones.
class SsytSampler {
public:
    SsytSampler(Partition shape, int max_entry);
    GTScheme sample_scheme(Rng& rng);
    SSYT sample(Rng& rng);

private:
    struct Step {
        std::vector<std::vector<long>> targets;
        std::vector<double> cumulative;
    };
    /// rows[k] holds the nonzero prefix of the level-(k+1) signature.
    std::vector<std::vector<long>> sample_rows(Rng& rng);
    const Step& step(int level, const std::vector<long>& nu);
    Partition shape_;
    int max_entry_;
    std::map<std::pair<int, std::vector<long>>, Step> steps_;
};

SSYT sample_uniform_ssyt(const Partition& shape, int max_entry, std::uint64_t seed);

/// Exact sampler of YB paths with a given boundary point: endpoint shape, then a uniform
/// standard tableau, then sorted uniforms on (0, r] assigned in tableau order.
class YBPathSampler {
public:
    YBPathSampler(ExactPoint omega, double r, const TailBudget& budget = {});
    GeneralizedTableau sample(Rng& rng);
    Partition sample_endpoint(Rng& rng);
    /// Probability that the endpoint size exceeds the supported cap.
    double tail_bound() const { return tail_bound_; }

private:
    const Rational& schur_value(const Partition& p);
    ExactPoint omega_;
    ExactPoint omega_hat_;
    double r_;
    long max_size_;
    double tail_bound_;
    std::map<Partition, Rational> schur_;
    std::map<Partition, StandardTableauSampler> tableaux_;
};

GeneralizedTableau sample_yb_path(const ExactPoint& omega, double r, std::uint64_t seed, const TailBudget& budget = {});

/// Probability of a finite initial path segment under the Gibbs measure of a coherent family.
/// The path starts at the bottom vertex; `family` returns M at the endpoint's level. The value is
/// M(endpoint) times the product of one-step link entries along the path.
Rational cylinder_probability_young(const std::vector<Partition>& path,
                                    const std::function<Rational(const Partition&)>& family);
Rational cylinder_probability_gt(const std::vector<Signature>& path,
                                 const std::function<Rational(const Signature&)>& family);
Rational cylinder_probability_pascal(const std::vector<PascalVertex>& path,
                                     const std::function<Rational(const PascalVertex&)>& family);

/// Sequence of diagrams ∅ ⊂ … ⊂ λ read off a standard tableau.
std::vector<Partition> young_path(const StandardTableau& t);
/// Signatures of levels 1..N read off a GT scheme.
std::vector<Signature> gt_path(const GTScheme& scheme);

struct DegenerationReport {
    std::vector<double> scales;
    std::vector<long> levels;
    /// Max over boxes of |first moment − reference| and |second moment − reference|.
    std::vector<double> discrepancy;
    std::vector<std::vector<double>> means;
    std::vector<double> reference_means;
    std::vector<double> reference_second_moments;
    long samples = 0;
    long reference_samples = 0;

    bool decreasing() const;
};

/// Uniform SSYT with entries ≤ round(rL), scaled by 1/L, against uniform-polytope moments
/// obtained by rejection sampling from (0, r]^{|λ|}. Boxes are listed row by row.
DegenerationReport path_degeneration_experiment(const Partition& shape, double r, const std::vector<double>& scales,
                                                std::uint64_t seed, long samples = 100000);

} // namespace bouquet
