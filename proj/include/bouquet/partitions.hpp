#pragma once

#include "bouquet/scalar.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace bouquet {

/// A Young diagram, stored as its weakly decreasing positive row lengths.
///
/// Trailing zeros passed to the constructor are dropped, so (2,1,0) and (2,1)
/// denote the same diagram. Rows are 0-based in the accessor: `row(0)` is the
/// first (longest) row, and rows beyond the length read as 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    /// Number of boxes |λ|.
    int size() const { return size_; }
    /// Number of nonzero rows ℓ(λ).
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int row(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;

    /// Diagrams obtained by deleting one corner box, in decreasing lexicographic order.
    std::vector<Partition> remove_one_box() const;
    /// Diagrams obtained by adding one box, in decreasing lexicographic order.
    std::vector<Partition> add_one_box() const;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A weakly decreasing integer vector of length N ≥ 1; a vertex of the Gelfand–Tsetlin graph.
class Signature {
public:
    /// The level-one signature (0).
    Signature() : coords_{0} {}
    explicit Signature(std::vector<long> coords);
    /// The nonnegative signature [λ, N]; requires ℓ(λ) ≤ N.
    Signature(const Partition& lambda, int level);

    const std::vector<long>& coords() const { return coords_; }
    int level() const { return static_cast<int>(coords_.size()); }
    long operator[](std::size_t i) const { return coords_[i]; }
    bool is_nonnegative() const { return coords_.back() >= 0; }
    /// Requires is_nonnegative().
    Partition to_partition() const;

    friend auto operator<=>(const Signature&, const Signature&) = default;
    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<long> coords_;
};

/// Modified Frobenius coordinates, stored doubled so that every entry is an odd integer.
struct FrobeniusCoords {
    std::vector<long> a_doubled;
    std::vector<long> b_doubled;

    int rank() const { return static_cast<int>(a_doubled.size()); }
    Rational a(std::size_t i) const { return Rational(a_doubled[i], 2); }
    Rational b(std::size_t i) const { return Rational(b_doubled[i], 2); }
};

/// All partitions of n in decreasing lexicographic order; enumerate_partitions(0) is {∅}.
std::vector<Partition> enumerate_partitions(int n);

/// All μ ⊆ ν with ℓ(μ) ≤ max_length, ordered by decreasing size then decreasing lexicographic.
std::vector<Partition> subdiagrams(const Partition& nu, int max_length);
std::vector<Partition> subdiagrams(const Partition& nu);

/// μ ⊆ ν.
bool contains(const Partition& mu, const Partition& nu);
/// μ ⊆ ν and |ν| = |μ| + 1.
bool covers(const Partition& mu, const Partition& nu);
/// μ ⊆ ν and ν/μ has at most one box per column.
bool is_horizontal_strip(const Partition& mu, const Partition& nu);
/// [μ, N] ≺ [ν, N+1] for signatures: ν_j ≥ μ_j ≥ ν_{j+1}.
bool interlaces(const Signature& mu, const Signature& nu);

/// Number of standard tableaux of shape λ (hook formula).
BigInt dim_standard(const Partition& lambda);

/// Number of standard tableaux of skew shape ν/μ, 0 unless μ ⊆ ν.
BigInt dim_skew(const Partition& mu, const Partition& nu);

/// Weyl dimension Π_{i<j≤N} (λ_i − λ_j − i + j)/(j − i). Throws InvalidInput when ℓ(λ) > N.
BigInt weyl_dim(const Partition& lambda, int level);
BigInt weyl_dim(const Signature& mu);

/// (N)_λ = Π over boxes (N + column − row).
BigInt content_product(const Partition& lambda, long shift);

FrobeniusCoords frobenius(const Partition& lambda);

} // namespace bouquet
