#include "oracles.hpp"

#include "bouquet/partitions.hpp"
#include "bouquet/symfunc.hpp"

#include <doctest.h>

#include <set>

using namespace bouquet;

TEST_CASE("partition construction")
{
    CHECK(Partition{2, 1, 0} == Partition{2, 1});
    CHECK(Partition{3, 1}.size() == 4);
    CHECK(Partition{3, 1}.length() == 2);
    CHECK(Partition{}.empty());
    CHECK(Partition{3, 1}.row(5) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), InvalidInput);
    CHECK_THROWS_AS(Partition({2, -1}), InvalidInput);
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{}.conjugate() == Partition{});
}

TEST_CASE("signatures")
{
    const Signature s({2, 0, -1});
    CHECK(s.level() == 3);
    CHECK_FALSE(s.is_nonnegative());
    CHECK_THROWS_AS(Signature({0, 1}), InvalidInput);
    CHECK_THROWS_AS(Signature(std::vector<long>{}), InvalidInput);
    const Signature t(Partition{2, 1}, 4);
    CHECK(t.coords() == std::vector<long>{2, 1, 0, 0});
    CHECK(t.to_partition() == Partition{2, 1});
    CHECK_THROWS_AS(Signature(Partition{1, 1, 1}, 2), InvalidInput);
    CHECK_THROWS(s.to_partition());
}

TEST_CASE("enumerate_partitions")
{
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(enumerate_partitions(8).size() == 22);
    CHECK_THROWS_AS(enumerate_partitions(-1), InvalidInput);

    // p(n) from Euler's pentagonal recurrence, and each list distinct and sorted.
    std::vector<long> p{1};
    for (int n = 1; n <= 14; ++n) {
        long v = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            const long sign = (k % 2 == 1) ? 1 : -1;
            v += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n)
                v += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p.push_back(v);
    }
    for (int n = 0; n <= 14; ++n) {
        const auto parts = enumerate_partitions(n);
        CHECK(static_cast<long>(parts.size()) == p[static_cast<std::size_t>(n)]);
        for (std::size_t i = 1; i < parts.size(); ++i)
            CHECK(parts[i - 1] > parts[i]);
        for (const auto& lam : parts)
            CHECK(lam.size() == n);
    }
}

TEST_CASE("order relations")
{
    CHECK(covers(Partition{1}, Partition{2}));
    CHECK(contains(Partition{1}, Partition{2, 2}));
    CHECK_FALSE(is_horizontal_strip(Partition{1}, Partition{2, 2}));
    CHECK(is_horizontal_strip(Partition{2, 1}, Partition{3, 1}));
    CHECK_FALSE(contains(Partition{2}, Partition{1, 1}));
    CHECK_FALSE(covers(Partition{1}, Partition{3}));
    CHECK(interlaces(Signature({1}), Signature({2, 0})));
    CHECK_FALSE(interlaces(Signature({3}), Signature({2, 0})));
    CHECK(interlaces(Signature({-1, -2}), Signature({0, -1, -3})));

    // horizontal strip iff ν_{i+1} ≤ μ_i ≤ ν_i, checked against the column description
    for (int n = 0; n <= 6; ++n)
        for (const auto& nu : enumerate_partitions(n))
            for (const auto& mu : subdiagrams(nu)) {
                const Partition a = mu.conjugate(), b = nu.conjugate();
                bool columns = true;
                for (int j = 0; j < b.length(); ++j)
                    columns = columns && b.row(static_cast<std::size_t>(j)) - a.row(static_cast<std::size_t>(j)) <= 1;
                CHECK(is_horizontal_strip(mu, nu) == columns);
            }
}

TEST_CASE("one-box moves")
{
    CHECK(Partition{2, 1}.remove_one_box() == std::vector<Partition>{{2}, {1, 1}});
    CHECK(Partition{2, 1}.add_one_box() == std::vector<Partition>{{3, 1}, {2, 2}, {2, 1, 1}});
    CHECK(Partition{}.remove_one_box().empty());
    for (int n = 0; n <= 7; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            for (const auto& mu : lam.remove_one_box())
                CHECK(covers(mu, lam));
            for (const auto& nu : lam.add_one_box())
                CHECK(covers(lam, nu));
        }
}

TEST_CASE("subdiagrams")
{
    const auto s = subdiagrams(Partition{2, 1});
    CHECK(s == std::vector<Partition>{{2, 1}, {2}, {1, 1}, {1}, {}});
    CHECK(subdiagrams(Partition{2, 1}, 1) == std::vector<Partition>{{2}, {1}, {}});
    for (int n = 0; n <= 6; ++n)
        for (const auto& nu : enumerate_partitions(n)) {
            std::size_t expected = 0;
            for (int m = 0; m <= n; ++m)
                for (const auto& mu : enumerate_partitions(m))
                    expected += contains(mu, nu) ? 1 : 0;
            CHECK(subdiagrams(nu).size() == expected);
        }
}

TEST_CASE("dim_standard")
{
    CHECK(dim_standard(Partition{}) == 1);
    CHECK(dim_standard(Partition{2, 1}) == 2);
    CHECK(dim_standard(Partition{3, 2}) == 5);
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            CHECK(dim_standard(lam) == oracle::count_chains(Partition{}, lam));
            CHECK(dim_standard(lam) == static_cast<long>(oracle::standard_tableaux(lam).size()));
        }
    for (int n = 1; n <= 10; ++n)
        for (const auto& nu : enumerate_partitions(n)) {
            BigInt s = 0;
            for (const auto& mu : nu.remove_one_box())
                s += dim_standard(mu);
            CHECK(dim_standard(nu) == s);
        }
    // Σ dim² = n!
    for (int n = 0; n <= 10; ++n) {
        BigInt s = 0;
        for (const auto& lam : enumerate_partitions(n))
            s += dim_standard(lam) * dim_standard(lam);
        CHECK(s == factorial(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("dim_skew")
{
    CHECK(dim_skew(Partition{}, Partition{2, 1}) == 2);
    CHECK(dim_skew(Partition{1}, Partition{2, 1}) == 2);
    CHECK(dim_skew(Partition{2}, Partition{1, 1}) == 0);
    CHECK(dim_skew(Partition{2, 1}, Partition{2, 1}) == 1);
    for (int n = 0; n <= 8; ++n)
        for (const auto& nu : enumerate_partitions(n))
            for (int m = 0; m <= n; ++m)
                for (const auto& mu : enumerate_partitions(m))
                    CHECK(dim_skew(mu, nu) == oracle::count_chains(mu, nu));
}

TEST_CASE("weyl_dim")
{
    CHECK(weyl_dim(Partition{}, 4) == 1);
    CHECK(weyl_dim(Partition{1}, 3) == 3);
    CHECK(weyl_dim(Partition{2, 1}, 2) == 2);
    CHECK_THROWS_AS(weyl_dim(Partition{1, 1, 1}, 2), InvalidInput);
    CHECK_THROWS_AS(weyl_dim(Partition{1}, 0), InvalidInput);
    CHECK(weyl_dim(Signature({-1, -1})) == 1);
    CHECK(weyl_dim(Signature({1, 0, -1})) == 8);
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : enumerate_partitions(n))
            for (int N = std::max(1, lam.length()); N <= 5; ++N) {
                CHECK(weyl_dim(lam, N) == schur_principal(lam, N));
                if (N <= 4)
                    CHECK(weyl_dim(lam, N) == oracle::count_ssyt(Partition{}, lam, N));
            }
    // shifting a signature by a constant leaves the dimension unchanged
    CHECK(weyl_dim(Signature({3, 1, 0})) == weyl_dim(Signature({1, -1, -2})));
    // GT schemes with a fixed top row are counted by Dim
    for (const std::vector<long>& top : {std::vector<long>{2, 0, -1}, {3, 1, 1, 0}, {2, 2}})
        CHECK(weyl_dim(Signature(top)) == static_cast<long>(oracle::gt_schemes(top).size()));
}

TEST_CASE("content_product")
{
    CHECK(content_product(Partition{2, 1}, 3) == 3 * 4 * 2);
    CHECK(content_product(Partition{}, 5) == 1);
    CHECK(content_product(Partition{1, 1}, 1) == 0);
}

TEST_CASE("frobenius coordinates")
{
    auto f = frobenius(Partition{1});
    REQUIRE(f.rank() == 1);
    CHECK(f.a(0) == Rational(1, 2));
    CHECK(f.b(0) == Rational(1, 2));
    f = frobenius(Partition{3, 1});
    REQUIRE(f.rank() == 1);
    CHECK(f.a(0) == Rational(5, 2));
    CHECK(f.b(0) == Rational(3, 2));
    CHECK(frobenius(Partition{}).rank() == 0);
    const ExactPoint w = omega_of(Partition{3, 1});
    CHECK(w.delta == 4);
    for (int n = 0; n <= 12; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            const auto fc = frobenius(lam);
            Rational s = 0;
            for (int i = 0; i < fc.rank(); ++i) {
                s += fc.a(static_cast<std::size_t>(i)) + fc.b(static_cast<std::size_t>(i));
                if (i > 0) {
                    CHECK(fc.a(static_cast<std::size_t>(i)) < fc.a(static_cast<std::size_t>(i - 1)));
                    CHECK(fc.b(static_cast<std::size_t>(i)) < fc.b(static_cast<std::size_t>(i - 1)));
                }
            }
            CHECK(s == n);
            // transposition swaps a and b
            const auto ft = frobenius(lam.conjugate());
            CHECK(ft.a_doubled == fc.b_doubled);
        }
}
