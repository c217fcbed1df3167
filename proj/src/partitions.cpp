#include "bouquet/partitions.hpp"

#include "bouquet/determinant.hpp"

#include <algorithm>
#include <functional>

namespace bouquet {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidInput("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidInput("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const
{
    std::vector<int> cols(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int len : parts_)
        for (int j = 0; j < len; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

std::vector<Partition> Partition::remove_one_box() const
{
    std::vector<Partition> out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i + 1 == parts_.size() || parts_[i + 1] < parts_[i]) {
            auto p = parts_;
            --p[i];
            out.emplace_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<Partition> Partition::add_one_box() const
{
    std::vector<Partition> out;
    for (std::size_t i = 0; i <= parts_.size(); ++i) {
        if (i == 0 || parts_[i - 1] > row(i)) {
            auto p = parts_;
            if (i == p.size())
                p.push_back(1);
            else
                ++p[i];
            out.emplace_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::string Partition::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Signature::Signature(std::vector<long> coords) : coords_(std::move(coords))
{
    if (coords_.empty())
        throw InvalidInput("signature must have length at least 1");
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] > coords_[i - 1])
            throw InvalidInput("signature coordinates must be weakly decreasing");
}

Signature::Signature(const Partition& lambda, int level)
    : Signature([&] {
          if (level < 1 || lambda.length() > level)
              throw InvalidInput("signature level must be at least the partition length");
          std::vector<long> c(static_cast<std::size_t>(level), 0);
          for (int i = 0; i < lambda.length(); ++i)
              c[static_cast<std::size_t>(i)] = lambda.row(static_cast<std::size_t>(i));
          return c;
      }())
{
}

Partition Signature::to_partition() const
{
    if (!is_nonnegative())
        throw InvalidInput("signature has negative coordinates");
    std::vector<int> parts(coords_.begin(), coords_.end());
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw InvalidInput("partition size must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> subdiagrams(const Partition& nu, int max_length)
{
    std::vector<Partition> out;
    std::vector<int> current;
    const int rows = std::min(nu.length(), max_length);
    std::function<void(int)> rec = [&](int i) {
        if (i == rows) {
            out.emplace_back(current);
            return;
        }
        int upper = nu.row(static_cast<std::size_t>(i));
        if (i > 0)
            upper = std::min(upper, current.back());
        for (int v = upper; v >= 0; --v) {
            current.push_back(v);
            rec(i + 1);
            current.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a > b;
    });
    return out;
}

std::vector<Partition> subdiagrams(const Partition& nu) { return subdiagrams(nu, nu.length()); }

bool contains(const Partition& mu, const Partition& nu)
{
    if (mu.length() > nu.length())
        return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.row(static_cast<std::size_t>(i)) > nu.row(static_cast<std::size_t>(i)))
            return false;
    return true;
}

bool covers(const Partition& mu, const Partition& nu)
{
    return nu.size() == mu.size() + 1 && contains(mu, nu);
}

bool is_horizontal_strip(const Partition& mu, const Partition& nu)
{
    if (!contains(mu, nu))
        return false;
    for (int i = 0; i < nu.length(); ++i)
        if (nu.row(static_cast<std::size_t>(i) + 1) > mu.row(static_cast<std::size_t>(i)))
            return false;
    return true;
}

bool interlaces(const Signature& mu, const Signature& nu)
{
    if (nu.level() != mu.level() + 1)
        return false;
    for (int j = 0; j < mu.level(); ++j) {
        const auto J = static_cast<std::size_t>(j);
        if (!(nu[J] >= mu[J] && mu[J] >= nu[J + 1]))
            return false;
    }
    return true;
}

BigInt dim_standard(const Partition& lambda)
{
    const Partition conj = lambda.conjugate();
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.row(static_cast<std::size_t>(i)); ++j) {
            const int arm = lambda.row(static_cast<std::size_t>(i)) - j - 1;
            const int leg = conj.row(static_cast<std::size_t>(j)) - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    BigInt out = factorial(static_cast<unsigned long>(lambda.size()));
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), hooks.get_mpz_t());
    return out;
}

BigInt dim_skew(const Partition& mu, const Partition& nu)
{
    if (!contains(mu, nu))
        return 0;
    const int l = nu.length();
    if (l == 0)
        return 1;
    // det[1/(ν_i − μ_j − i + j)!] with row i scaled by (ν_i − i + ℓ)! to clear denominators.
    SquareMatrix<BigInt> m(static_cast<std::size_t>(l));
    BigInt row_scale = 1;
    for (int i = 0; i < l; ++i) {
        const long top = nu.row(static_cast<std::size_t>(i)) - i + l - 1;
        row_scale *= factorial(static_cast<unsigned long>(top));
        for (int j = 0; j < l; ++j) {
            const long k = nu.row(static_cast<std::size_t>(i)) - mu.row(static_cast<std::size_t>(j)) - i + j;
            if (k < 0)
                continue;
            BigInt falling = 1;
            for (long f = k + 1; f <= top; ++f)
                falling *= f;
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = falling;
        }
    }
    BigInt out = determinant(std::move(m)) * factorial(static_cast<unsigned long>(nu.size() - mu.size()));
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), row_scale.get_mpz_t());
    return out;
}

BigInt weyl_dim(const Partition& lambda, int level)
{
    if (level < 1 || lambda.length() > level)
        throw InvalidInput("weyl_dim requires 1 <= length(lambda) <= N");
    return weyl_dim(Signature(lambda, level));
}

BigInt weyl_dim(const Signature& mu)
{
    const int n = mu.level();
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const long diff = mu[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(j)];
            if (diff == 0)
                continue; // factor (j − i)/(j − i)
            num *= diff + (j - i);
            den *= j - i;
        }
    }
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return num;
}

BigInt content_product(const Partition& lambda, long shift)
{
    BigInt out = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.row(static_cast<std::size_t>(i)); ++j)
            out *= shift + j - i;
    return out;
}

FrobeniusCoords frobenius(const Partition& lambda)
{
    const Partition conj = lambda.conjugate();
    FrobeniusCoords out;
    for (int i = 0; i < lambda.length() && lambda.row(static_cast<std::size_t>(i)) > i; ++i) {
        out.a_doubled.push_back(2L * (lambda.row(static_cast<std::size_t>(i)) - i - 1) + 1);
        out.b_doubled.push_back(2L * (conj.row(static_cast<std::size_t>(i)) - i - 1) + 1);
    }
    return out;
}

} // namespace bouquet
