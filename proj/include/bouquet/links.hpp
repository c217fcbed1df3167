#pragma once

#include "bouquet/partitions.hpp"
#include "bouquet/scalar.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bouquet {

/// A vertex (n₁, n₂) of the Pascal graph; its level is n₁ + n₂.
struct PascalVertex {
    long n1 = 0;
    long n2 = 0;
    long level() const { return n1 + n2; }
    friend auto operator<=>(const PascalVertex&, const PascalVertex&) = default;
    friend bool operator==(const PascalVertex&, const PascalVertex&) = default;
};

/// Deterministic entry order of a kernel row: diagrams and signatures in
/// decreasing lexicographic order, integers and lattice points increasing.
template <class V>
struct VertexOrder {
    using type = std::less<V>;
};
template <>
struct VertexOrder<Partition> {
    using type = std::greater<Partition>;
};
template <>
struct VertexOrder<Signature> {
    using type = std::greater<Signature>;
};

class LevelMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// One row Λ(source, ·) of a link, restricted to its (finite) support.
template <class V>
struct KernelRow {
    V source;
    Rational level_from;
    Rational level_to;
    std::map<V, Rational, typename VertexOrder<V>::type> entries;

    Rational at(const V& target) const
    {
        auto it = entries.find(target);
        return it == entries.end() ? Rational(0) : it->second;
    }

    Rational total() const
    {
        Rational s = 0;
        for (const auto& [v, p] : entries)
            s += p;
        return s;
    }

    bool is_stochastic() const
    {
        for (const auto& [v, p] : entries)
            if (sgn(p) <= 0)
                return false;
        return total() == 1;
    }

    /// Adds p to the target; zero contributions leave the support untouched.
    void add(const V& target, const Rational& p)
    {
        if (sgn(p) == 0)
            return;
        auto [it, inserted] = entries.try_emplace(target, p);
        if (!inserted) {
            it->second += p;
            if (sgn(it->second) == 0)
                entries.erase(it);
        }
    }
};

template <class V>
using RowProducer = std::function<KernelRow<V>(const V&)>;

/// Λᴮ with ratio q = r/r′ ∈ (0, 1); the row is the binomial(n, q) law.
KernelRow<long> binom_link(long n, const Rational& q);
/// Λᴮ from level r_from to level r_to < r_from.
KernelRow<long> binom_link(long n, const Rational& r_from, const Rational& r_to);

/// Λʸ from level |ν| to level m: μ ↦ dim μ · dim(μ, ν) / dim ν.
KernelRow<Partition> young_link(const Partition& nu, int m);

/// Λᴳᵀ from [ν, N′] to level N < N′ on nonnegative signatures.
KernelRow<Signature> gt_link(const Signature& nu, int level_to);

/// Λʸᴮ with ratio q = r/r′: binomial size selection followed by Λʸ.
KernelRow<Partition> yb_link(const Partition& nu, const Rational& q);
KernelRow<Partition> yb_link(const Partition& nu, const Rational& r_from, const Rational& r_to);

/// Single entries Λʸ(ν, μ) and Λʸᴮ(ν, μ) without building the whole row.
Rational young_link_entry(const Partition& nu, const Partition& mu);
Rational yb_link_entry(const Partition& nu, const Partition& mu, const Rational& q);

/// Pascal graph link to level n₁ + n₂ − 1.
KernelRow<PascalVertex> pascal_link(const PascalVertex& v);

Rational rational_pow(const Rational& base, unsigned long exponent);

/// Exact product of kernels: (upper ∘ lower)(v, ·) = Σ_u upper(v, u) lower(u, ·).
template <class V>
RowProducer<V> compose(RowProducer<V> upper, RowProducer<V> lower)
{
    return [upper = std::move(upper), lower = std::move(lower)](const V& v) {
        const KernelRow<V> first = upper(v);
        KernelRow<V> out;
        out.source = v;
        out.level_from = first.level_from;
        bool have_level = false;
        for (const auto& [u, p] : first.entries) {
            const KernelRow<V> second = lower(u);
            if (second.level_from != first.level_to)
                throw LevelMismatch("compose: lower kernel does not start at the upper kernel's target level");
            if (have_level && second.level_to != out.level_to)
                throw LevelMismatch("compose: lower kernel rows end on different levels");
            out.level_to = second.level_to;
            have_level = true;
            for (const auto& [w, p2] : second.entries)
                out.add(w, Rational(p * p2));
        }
        if (!have_level)
            out.level_to = first.level_to;
        return out;
    };
}

template <class V>
struct CompatibilityReport {
    struct Item {
        V vertex;
        bool equal;
        Rational max_abs_difference;
    };
    std::vector<Item> items;

    bool all_equal() const
    {
        for (const auto& it : items)
            if (!it.equal)
                return false;
        return true;
    }
};

/// Checks (A ∘ B)(v, ·) = C(v, ·) entrywise and exactly, for every sampled v in the given order.
template <class V>
CompatibilityReport<V> check_compatibility(const RowProducer<V>& a, const RowProducer<V>& b,
                                           const RowProducer<V>& c, const std::vector<V>& samples)
{
    const RowProducer<V> ab = compose(a, b);
    CompatibilityReport<V> report;
    for (const auto& v : samples) {
        const KernelRow<V> lhs = ab(v);
        const KernelRow<V> rhs = c(v);
        if (lhs.level_from != rhs.level_from || lhs.level_to != rhs.level_to)
            throw LevelMismatch("check_compatibility: composed and direct kernels join different levels");
        Rational worst = 0;
        for (const auto& [w, p] : lhs.entries)
            worst = std::max(worst, Rational(abs(p - rhs.at(w))));
        for (const auto& [w, p] : rhs.entries)
            worst = std::max(worst, Rational(abs(p - lhs.at(w))));
        report.items.push_back({v, sgn(worst) == 0, worst});
    }
    return report;
}

} // namespace bouquet
