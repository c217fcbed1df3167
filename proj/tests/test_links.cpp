#include "bouquet/links.hpp"
#include "bouquet/symfunc.hpp"

#include <doctest.h>

using namespace bouquet;

namespace {

template <class V>
std::map<V, Rational, typename VertexOrder<V>::type> entries(std::initializer_list<std::pair<V, Rational>> list)
{
    std::map<V, Rational, typename VertexOrder<V>::type> out;
    for (const auto& [v, p] : list)
        out[v] = p;
    return out;
}

std::vector<Partition> partitions_up_to(int n)
{
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& p : enumerate_partitions(k))
            out.push_back(p);
    return out;
}

const Rational qs[] = {Rational(1, 2), Rational(1, 3), Rational(3, 5)};

} // namespace

TEST_CASE("binomial link")
{
    CHECK(binom_link(0, Rational(1, 2)).entries == entries<long>({{0, 1}}));
    CHECK(binom_link(2, Rational(1, 2)).entries
          == entries<long>({{0, Rational(1, 4)}, {1, Rational(1, 2)}, {2, Rational(1, 4)}}));
    CHECK(binom_link(3, Rational(1, 3)).entries
          == entries<long>({{0, Rational(8, 27)}, {1, Rational(4, 9)}, {2, Rational(2, 9)}, {3, Rational(1, 27)}}));
    CHECK_THROWS_AS(binom_link(2, Rational(1)), InvalidInput);
    CHECK_THROWS_AS(binom_link(2, Rational(0)), InvalidInput);
    CHECK_THROWS_AS(binom_link(-1, Rational(1, 2)), InvalidInput);
    CHECK_THROWS_AS(binom_link(2, Rational(1), Rational(2)), InvalidInput);
    CHECK(binom_link(4, Rational(3), Rational(1)).entries == binom_link(4, Rational(1, 3)).entries);
    for (const auto& q : qs)
        for (long n = 0; n <= 12; ++n)
            CHECK(binom_link(n, q).is_stochastic());
}

TEST_CASE("young link")
{
    CHECK(young_link(Partition{2, 1}, 2).entries
          == entries<Partition>({{Partition{2}, Rational(1, 2)}, {Partition{1, 1}, Rational(1, 2)}}));
    CHECK(young_link(Partition{2}, 1).entries == entries<Partition>({{Partition{1}, 1}}));
    CHECK(young_link(Partition{3, 1}, 4).entries == entries<Partition>({{Partition{3, 1}, 1}}));
    CHECK_THROWS_AS(young_link(Partition{2}, 3), InvalidInput);
    CHECK_THROWS_AS(young_link(Partition{2}, -1), InvalidInput);
    for (const auto& nu : partitions_up_to(12))
        for (int m = 0; m <= nu.size(); ++m) {
            const auto row = young_link(nu, m);
            CHECK(row.is_stochastic());
            for (const auto& [mu, p] : row.entries) {
                CHECK(mu.size() == m);
                CHECK(contains(mu, nu));
                CHECK(young_link_entry(nu, mu) == p);
            }
        }
    CHECK(young_link_entry(Partition{2}, Partition{1, 1}) == 0);
}

TEST_CASE("gt link")
{
    CHECK(gt_link(Signature({1, 0}), 1).entries
          == entries<Signature>({{Signature({1}), Rational(1, 2)}, {Signature({0}), Rational(1, 2)}}));
    CHECK(gt_link(Signature({0, 0, 0}), 2).entries == entries<Signature>({{Signature({0, 0}), 1}}));
    CHECK(gt_link(Signature({2, 0}), 1).entries
          == entries<Signature>(
              {{Signature({2}), Rational(1, 3)}, {Signature({1}), Rational(1, 3)}, {Signature({0}), Rational(1, 3)}}));
    CHECK_THROWS_AS(gt_link(Signature({1, 0}), 2), InvalidInput);
    CHECK_THROWS_AS(gt_link(Signature({1, 0}), 0), InvalidInput);
    CHECK_THROWS_AS(gt_link(Signature({1, -1}), 1), InvalidInput);
    for (int level = 2; level <= 8; ++level)
        for (const auto& lam : partitions_up_to(level <= 5 ? 8 : 5)) {
            if (lam.length() > level)
                continue;
            const Signature nu(lam, level);
            for (int to = 1; to < level; ++to) {
                const auto row = gt_link(nu, to);
                CHECK(row.is_stochastic());
                if (to == level - 1) {
                    // one step: Dim μ / Dim ν on the interlacing μ
                    std::size_t interlacing = 0;
                    for (const auto& mu : subdiagrams(lam, to)) {
                        const Signature s(mu, to);
                        if (interlaces(s, nu)) {
                            ++interlacing;
                            CHECK(row.at(s) == Rational(weyl_dim(s)) / Rational(weyl_dim(nu)));
                            CHECK(is_horizontal_strip(mu, lam));
                        } else {
                            CHECK(row.at(s) == 0);
                        }
                    }
                    CHECK(row.entries.size() == interlacing);
                }
            }
        }
}

TEST_CASE("young bouquet link")
{
    CHECK(yb_link(Partition{1}, Rational(1, 2)).entries
          == entries<Partition>({{Partition{1}, Rational(1, 2)}, {Partition{}, Rational(1, 2)}}));
    CHECK(yb_link(Partition{}, Rational(1, 3)).entries == entries<Partition>({{Partition{}, 1}}));
    CHECK(yb_link(Partition{2, 1}, Rational(1, 2)).at(Partition{1}) == Rational(3, 8));
    CHECK_THROWS_AS(yb_link(Partition{1}, Rational(3, 2)), InvalidInput);
    CHECK_THROWS_AS(yb_link(Partition{1}, Rational(1), Rational(1)), InvalidInput);
    for (const auto& q : qs)
        for (const auto& nu : partitions_up_to(10)) {
            const auto row = yb_link(nu, q);
            CHECK(row.is_stochastic());
            CHECK(row.entries.size() == subdiagrams(nu).size());
            const auto b = binom_link(nu.size(), q);
            for (const auto& [mu, p] : row.entries) {
                CHECK(p == b.at(mu.size()) * young_link(nu, mu.size()).at(mu));
                CHECK(yb_link_entry(nu, mu, q) == p);
            }
        }
}

TEST_CASE("pascal link")
{
    CHECK(pascal_link({1, 0}).entries == entries<PascalVertex>({{{0, 0}, 1}}));
    CHECK(pascal_link({1, 1}).entries == entries<PascalVertex>({{{0, 1}, Rational(1, 2)}, {{1, 0}, Rational(1, 2)}}));
    CHECK(pascal_link({2, 1}).entries == entries<PascalVertex>({{{1, 1}, Rational(2, 3)}, {{2, 0}, Rational(1, 3)}}));
    CHECK_THROWS_AS(pascal_link({0, 0}), InvalidInput);
    CHECK_THROWS_AS(pascal_link({-1, 2}), InvalidInput);
    for (long a = 0; a <= 10; ++a)
        for (long b = 0; a + b <= 10; ++b)
            if (a + b > 0)
                CHECK(pascal_link({a, b}).is_stochastic());
}

TEST_CASE("composition")
{
    for (const auto& [q1, q2] : {std::pair{Rational(1, 2), Rational(1, 3)}, std::pair{Rational(1, 3), Rational(1, 2)}}) {
        std::vector<long> ns;
        for (long n = 0; n <= 15; ++n)
            ns.push_back(n);
        const Rational mid = q1, low = q1 * q2;
        const RowProducer<long> a = [=](const long& n) { return binom_link(n, Rational(1), mid); };
        const RowProducer<long> b = [=](const long& n) { return binom_link(n, mid, low); };
        const RowProducer<long> c = [=](const long& n) { return binom_link(n, Rational(1), low); };
        CHECK(check_compatibility(a, b, c, ns).all_equal());
        const RowProducer<long> wrong = [=](const long& n) {
            auto row = binom_link(n, Rational(1), low);
            row.entries = binom_link(n, Rational(1), mid).entries;
            return row;
        };
        CHECK_FALSE(check_compatibility(a, b, wrong, std::vector<long>{3}).all_equal());
    }
    // level-tagged composition r'' = 3 -> r' = 2 -> r = 1
    {
        const RowProducer<long> a = [](const long& n) { return binom_link(n, Rational(3), Rational(2)); };
        const RowProducer<long> b = [](const long& n) { return binom_link(n, Rational(2), Rational(1)); };
        const RowProducer<long> c = [](const long& n) { return binom_link(n, Rational(3), Rational(1)); };
        CHECK(check_compatibility(a, b, c, std::vector<long>{0, 4, 9}).all_equal());
        const RowProducer<long> c2 = [](const long& n) { return binom_link(n, Rational(6), Rational(2)); };
        CHECK_THROWS_AS(check_compatibility(a, b, c2, std::vector<long>{1}), LevelMismatch);
    }
    for (int top = 2; top <= 6; ++top)
        for (int mid = 1; mid < top; ++mid)
            for (int low = 0; low < mid; ++low) {
                const RowProducer<Partition> a = [mid](const Partition& nu) { return young_link(nu, mid); };
                const RowProducer<Partition> b = [low](const Partition& nu) { return young_link(nu, low); };
                const RowProducer<Partition> c = [low](const Partition& nu) { return young_link(nu, low); };
                CHECK(check_compatibility(a, b, c, enumerate_partitions(top)).all_equal());
            }
    {
        const RowProducer<Partition> a = [](const Partition& nu) { return young_link(nu, nu.size()); };
        const RowProducer<Partition> b = [](const Partition& nu) { return young_link(nu, 2); };
        CHECK(check_compatibility(a, b, b, enumerate_partitions(4)).all_equal());
    }
    for (int top = 3; top <= 5; ++top)
        for (int mid = 2; mid < top; ++mid)
            for (int low = 1; low < mid; ++low) {
                std::vector<Signature> samples;
                for (int n = 0; n <= 4; ++n)
                    for (const auto& lam : enumerate_partitions(n))
                        if (lam.length() <= top)
                            samples.emplace_back(lam, top);
                const RowProducer<Signature> a = [mid](const Signature& nu) { return gt_link(nu, mid); };
                const RowProducer<Signature> b = [low](const Signature& nu) { return gt_link(nu, low); };
                CHECK(check_compatibility(a, b, b, samples).all_equal());
            }
    for (const auto& [q1, q2] : {std::pair{Rational(1, 2), Rational(3, 5)}}) {
        const Rational mid = q1, low = q1 * q2;
        const RowProducer<Partition> a = [=](const Partition& nu) { return yb_link(nu, Rational(1), mid); };
        const RowProducer<Partition> b = [=](const Partition& nu) { return yb_link(nu, mid, low); };
        const RowProducer<Partition> c = [=](const Partition& nu) { return yb_link(nu, Rational(1), low); };
        std::vector<Partition> samples;
        for (int n = 0; n <= 5; ++n)
            for (const auto& p : enumerate_partitions(n))
                samples.push_back(p);
        CHECK(check_compatibility(a, b, c, samples).all_equal());
    }
}
