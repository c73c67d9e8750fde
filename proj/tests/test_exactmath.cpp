#include "knotforge/errors.hpp"
#include "knotforge/exactmath.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace knotforge;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<long> small(const std::vector<BigInt>& v) {
    std::vector<long> out;
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
}

// Searches all a = (a_1, ..., a_n), |a_i| <= 6, n <= 4, whose signed even
// continued fraction equals the target; returns the shortest, lexicographically first.
std::vector<long> search_even_cf(const mpq_class& target) {
    for (int n = 1; n <= 4; ++n) {
        std::vector<long> a(n, -6);
        while (true) {
            bool ok = std::all_of(a.begin(), a.end(), [](long x) { return x != 0; });
            if (ok) {
                std::vector<long> terms;
                for (int i = 0; i < n; ++i) terms.push_back((i % 2 == 0 ? 2 : -2) * a[i]);
                bool finite = true;
                mpq_class v = terms.back();
                for (int i = n - 1; i-- > 0;) {
                    if (v == 0) {
                        finite = false;
                        break;
                    }
                    v = terms[i] + 1 / v;
                }
                if (finite && v == target) return a;
            }
            int i = 0;
            while (i < n && a[i] == 6) a[i++] = -6;
            if (i == n) break;
            ++a[i];
        }
    }
    return {};
}

}  // namespace

TEST(SinSign, Examples) {
    EXPECT_EQ(sin_sign(PiRational::of(0)), 0);
    EXPECT_EQ(sin_sign(PiRational::of(1, 2)), 1);
    EXPECT_EQ(sin_sign(PiRational::of(7, 6)), -1);
    EXPECT_EQ(sin_sign(PiRational::of(-1, 3)), -1);
    EXPECT_EQ(sin_sign(PiRational::of(5)), 0);
}

TEST(SinSign, PeriodAndAntiperiod) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-500, 500), den(1, 60);
    for (int i = 0; i < 2000; ++i) {
        PiRational t = PiRational::of(num(rng), den(rng));
        EXPECT_EQ(sin_sign(t), sin_sign(t + PiRational::of(2)));
        EXPECT_EQ(sin_sign(t + PiRational::of(1)), -sin_sign(t));
        long double s = std::sin(t.radians());
        if (std::fabs(s) > 1e-12L) EXPECT_EQ(sin_sign(t), s > 0 ? 1 : -1);
    }
}

TEST(PiRational, ReducedMod2) {
    EXPECT_EQ(PiRational::of(7, 3).reduced_mod2(), make_rational(1, 3));
    EXPECT_EQ(PiRational::of(-1, 2).reduced_mod2(), make_rational(3, 2));
    EXPECT_EQ(PiRational::of(2).reduced_mod2(), make_rational(0));
}

TEST(BigRational, CanonicalForm) {
    BigRational r = make_rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(to_string(make_rational(0, 5)), "0/1");
    EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
    EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
    EXPECT_THROW(parse_rational("abc"), InvalidArgument);
}

TEST(ModInverse, Examples) {
    EXPECT_EQ(mod_inverse(2, 7), 4);
    EXPECT_EQ(mod_inverse(1, 9), 1);
    // Frozen from oracle::brute_inverse(5, 13).
    ASSERT_EQ(oracle::brute_inverse(5, 13), 8);
    EXPECT_EQ(mod_inverse(5, 13), 8);
    EXPECT_THROW(mod_inverse(3, 9), NonInvertible);
}

TEST(ModInverse, RandomCoprimePairs) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> pd(3, 2000000);
    int tested = 0;
    while (tested < 10000) {
        long p = pd(rng) | 1;
        long q = std::uniform_int_distribution<long>(1, p - 1)(rng);
        if (oracle::gcd(p, q) != 1) continue;
        BigInt inv = mod_inverse(q, p);
        EXPECT_TRUE(inv > 0 && inv < p);
        EXPECT_EQ(BigInt(inv * q % p), 1);
        ++tested;
    }
    for (long p = 3; p < 200; p += 2)
        for (long q = 1; q < p; ++q)
            if (oracle::gcd(p, q) == 1) ASSERT_EQ(mod_inverse(q, p), oracle::brute_inverse(q, p));
}

TEST(EvenCf, Examples) {
    // Frozen from search_even_cf over the fraction that even_cf_expand targets.
    ASSERT_EQ(search_even_cf(mpq_class(9, 2)), (std::vector<long>{2, -1}));
    EXPECT_EQ(small(even_cf_expand(9, 2)), (std::vector<long>{2, -1}));

    // 5/2: [2, -(-2)] = 2 + 1/2.
    ASSERT_EQ(search_even_cf(mpq_class(5, 2)), (std::vector<long>{1, -1}));
    EXPECT_EQ(small(even_cf_expand(5, 2)), (std::vector<long>{1, -1}));

    // 3/1 has no all-even expansion; the residue 1 - 3 = -2 gives -3/2 instead.
    ASSERT_TRUE(search_even_cf(mpq_class(3, 1)).empty());
    ASSERT_EQ(search_even_cf(mpq_class(-3, 2)), (std::vector<long>{-1, -1}));
    EXPECT_EQ(even_cf_target(3, 1), make_rational(-3, 2));
    EXPECT_EQ(small(even_cf_expand(3, 1)), (std::vector<long>{-1, -1}));
}

TEST(EvenCf, OddLengthForLinks) {
    // 2/1 = [2] and 4/3 = [2, -2, 2] are expansions of two-component links.
    EXPECT_THROW(even_cf_expand(2, 1), OddLength);
    EXPECT_THROW(even_cf_expand(4, 3), OddLength);
}

TEST(EvenCf, ReevaluatesRandomFractions) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> pd(1, 500000);
    int tested = 0;
    while (tested < 3000) {
        long p = 2 * pd(rng) + 1;
        long q = std::uniform_int_distribution<long>(1, p - 1)(rng);
        if (oracle::gcd(p, q) != 1) continue;
        ++tested;
        auto a = even_cf_expand(p, q);
        ASSERT_EQ(a.size() % 2, 0u);
        std::vector<long> terms;
        for (std::size_t i = 0; i < a.size(); ++i) terms.push_back((i % 2 == 0 ? 2 : -2) * a[i].get_si());
        mpq_class v = oracle::cf_convergent(terms);
        // Same knot: numerator p, denominator congruent to q mod p.
        ASSERT_EQ(abs(v.get_num()), p) << p << "/" << q;
        mpz_class d = v.get_den() * (v.get_num() < 0 ? -1 : 1);
        ASSERT_EQ(((d - q) % p + p) % p, 0) << p << "/" << q;
        ASSERT_EQ(v, even_cf_target(p, q));
    }
}

TEST(CfEvaluate, Examples) {
    EXPECT_EQ(cf_evaluate(big({3})), make_rational(3));
    EXPECT_EQ(cf_evaluate(big({1, 2, 1})), make_rational(4, 3));
    EXPECT_EQ(cf_evaluate(big({2, -2})), make_rational(3, 2));
    EXPECT_EQ(oracle::cf_convergent({1, 2, 1}), mpq_class(4, 3));
}

TEST(CfEvaluate, IntermediateZero) {
    // -1 + 1/1 = 0 sits in a denominator, so the value is 1 + 1/0.
    EXPECT_THROW(cf_evaluate(big({1, -1, 1})), IntermediateZero);
    EXPECT_TRUE(cf_evaluate_projective(big({1, -1, 1})).is_infinite());
    // Passing through infinity: 1 + 1/(-1 + 1/(1 + 1/0)) = 1 + 1/(-1 + 0) = 0.
    ProjectiveRational v = cf_evaluate_projective(big({1, -1, 1, -1, 1}));
    EXPECT_EQ(v.num, 0);
    EXPECT_EQ(v.den, 1);
    ProjectiveRational inf = cf_evaluate_projective(big({0}));
    EXPECT_FALSE(inf.is_infinite());
    ProjectiveRational tail = cf_evaluate_projective(big({2, 0}));
    EXPECT_TRUE(tail.is_infinite());
}

TEST(CfEvaluate, ProjectiveMatches256BitFloat) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> len(1, 40), term(-9, 9);
    int tested = 0;
    while (tested < 500) {
        std::vector<long> terms(len(rng));
        for (auto& t : terms)
            do t = term(rng);
            while (t == 0);
        std::vector<BigInt> b(terms.begin(), terms.end());
        BigRational exact;
        try {
            exact = cf_evaluate(b);
        } catch (const IntermediateZero&) {
            continue;
        }
        ProjectiveRational p = cf_evaluate_projective(b);
        ASSERT_EQ(BigRational(p.num, p.den), exact);
        ASSERT_EQ(exact, oracle::cf_convergent(terms));
        mpf_class f = oracle::cf_float256(terms);
        mpf_class e(exact, 256);
        mpf_class diff = abs(f - e);
        ASSERT_LT(diff, mpf_class("1e-30", 256));
        ++tested;
    }
}

TEST(RegularCf, Examples) {
    EXPECT_EQ(small(regular_cf(7, 2)), (std::vector<long>{3, 2}));
    EXPECT_EQ(small(regular_cf(31, 12)), (std::vector<long>{2, 1, 1, 2, 2}));
}
