#include "knotforge/errors.hpp"
#include "knotforge/twobridge.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace knotforge;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

LaurentPolyInt poly(std::initializer_list<std::pair<int, long>> terms) {
    LaurentPolyInt p;
    for (auto [e, c] : terms) p.add(e, c);
    return p;
}

}  // namespace

TEST(Canonical, Examples) {
    EXPECT_EQ(canonical(7, 5).to_string(), "7/2");
    ASSERT_EQ(oracle::orbit_min(9, 7), 2);
    EXPECT_EQ(canonical(9, 7).to_string(), "9/2");
    ASSERT_EQ(oracle::orbit_min(15, 4), 4);
    EXPECT_EQ(canonical(15, 4).to_string(), "15/4");
    EXPECT_TRUE(canonical(1, 0).is_unknot());
    EXPECT_TRUE(canonical(-1, 5).is_unknot());
    EXPECT_THROW(canonical(8, 3), EvenP);
    EXPECT_THROW(canonical(0, 1), InvalidArgument);
}

TEST(Canonical, IdempotentAndConstantOnOrbits) {
    for (long p = 3; p < 400; p += 2) {
        for (long q = 1; q < p; ++q) {
            if (oracle::gcd(p, q) != 1) continue;
            TwoBridgeFraction f = canonical(p, q);
            ASSERT_EQ(f.q, oracle::orbit_min(p, q));
            ASSERT_EQ(canonical(f.p, f.q), f);
            long inv = oracle::brute_inverse(q, p);
            ASSERT_EQ(canonical(p, p - q), f);
            ASSERT_EQ(canonical(p, inv), f);
            ASSERT_EQ(canonical(p, p - inv), f);
            ASSERT_EQ(canonical(-p, q + 3 * p), f);
        }
    }
}

TEST(Fraction, ParseAndFormat) {
    ASSERT_EQ(oracle::orbit_min(11, 7), 3);
    EXPECT_EQ(parse_fraction("11/7").to_string(), "11/3");
    EXPECT_THROW(parse_fraction("11"), InvalidArgument);
}

TEST(FractionFromDiagram, AllPositiveSigns) {
    SignSequence4Plat s{{1, 1, 1}, {{1, 1}, {1, 1}}};
    EXPECT_EQ(four_plat_terms(s), big({1, 2, 1, 2, 1}));
    // Oracle: forward convergents, then the orbit minimum by scanning.
    mpq_class v = oracle::cf_convergent({1, 2, 1, 2, 1});
    ASSERT_EQ(v, mpq_class(15, 11));
    long q = oracle::orbit_min(15, 11);
    ASSERT_EQ(q, 4);
    EXPECT_EQ(fraction_from_diagram(s).to_string(), "15/4");
}

TEST(FractionFromDiagram, UnknotAndIntermediateInfinity) {
    // [1, 0, -1, 0, 1] passes through infinity on the way to 1/1.
    SignSequence4Plat unknot{{1, -1, 1}, {{1, -1}, {-1, 1}}};
    ASSERT_EQ(oracle::cf_convergent({1, 0, -1, 0, 1}), mpq_class(1));
    EXPECT_TRUE(fraction_from_diagram(unknot).is_unknot());
    SignSequence4Plat trivial{{1}, {}};
    EXPECT_TRUE(fraction_from_diagram(trivial).is_unknot());
}

TEST(Conway, Examples) {
    EXPECT_EQ(conway_polynomial(big({3, 5})), poly({{0, 1}, {2, 15}}));
    EXPECT_EQ(conway_polynomial(big({})), poly({{0, 1}}));
    EXPECT_EQ(conway_polynomial(big({2, -1})), poly({{0, 1}, {2, -2}}));
}

TEST(Alexander, FromConway) {
    for (long a1a2 : {-3L, -1L, 2L, 5L})
        EXPECT_EQ(alexander_from_conway(poly({{0, 1}, {2, a1a2}})), poly({{-1, a1a2}, {0, 1 - 2 * a1a2}, {1, a1a2}}));
    EXPECT_EQ(alexander_from_conway(poly({{0, 1}})), poly({{0, 1}}));
    EXPECT_EQ(alexander_from_conway(poly({{0, 1}, {2, -2}})), poly({{-1, -2}, {0, 5}, {1, -2}}));
    EXPECT_THROW(alexander_from_conway(poly({{1, 1}})), OddDegree);
}

TEST(Alexander, SquareMod2) {
    LaurentPolyInt d92 = alexander_of(parse_fraction("9/2"));
    EXPECT_EQ(d92, poly({{-1, -2}, {0, 5}, {1, -2}}));
    EXPECT_TRUE(is_square_mod2(d92));
    LaurentPolyInt trefoil = alexander_of(parse_fraction("3/1"));
    EXPECT_EQ(trefoil, poly({{-1, -1}, {0, 1}, {1, -1}}));
    EXPECT_FALSE(is_square_mod2(trefoil));
    EXPECT_TRUE(is_square_mod2(poly({{0, 1}})));
    EXPECT_THROW(is_square_mod2(poly({{0, 1}, {1, 1}})), Asymmetric);
}

TEST(Alexander, DeterminantIsP) {
    // |Delta(-1)| = p for K(p/q).
    for (long p = 3; p < 120; p += 2) {
        for (long q = 1; q < p; ++q) {
            if (oracle::gcd(p, q) != 1) continue;
            LaurentPolyInt d = alexander_of(canonical(p, q));
            BigInt at_minus_one = 0;
            for (const auto& [e, c] : d.terms()) at_minus_one += (e % 2 == 0 ? 1 : -1) * c;
            ASSERT_EQ(abs(at_minus_one), p) << p << "/" << q;
            // Delta(1) = 1.
            BigInt at_one = 0;
            for (const auto& [e, c] : d.terms()) at_one += c;
            ASSERT_EQ(abs(at_one), 1);
        }
    }
}

TEST(LinkingNumber, Examples) {
    EXPECT_EQ(linking_number_with_axis(big({2, -1})), -1);
    EXPECT_EQ(linking_number_with_axis(big({1, 1})), 3);
    EXPECT_EQ(linking_number_with_axis(big({})), 1);
}

TEST(CrossingNumber, Examples) {
    EXPECT_EQ(crossing_number(parse_fraction("3/1")), 3);
    EXPECT_EQ(crossing_number(parse_fraction("7/2")), 5);
    EXPECT_EQ(crossing_number(parse_fraction("31/12")), 8);
    EXPECT_EQ(crossing_number(parse_fraction("1/1")), 0);
}

TEST(EnumerateTwoBridge, Examples) {
    auto table = enumerate_two_bridge(10);
    EXPECT_EQ(table[3].size(), 1u);
    EXPECT_EQ(table[7].size(), 7u);
    std::set<std::string> delta_one;
    for (const auto& f : table[8])
        if (is_one_mod2(alexander_of(f))) delta_one.insert(f.to_string());
    EXPECT_EQ(delta_one, (std::set<std::string>{"17/4", "23/7", "25/9", "31/12"}));
    std::size_t ten = 0;
    for (const auto& f : table[10])
        if (is_one_mod2(alexander_of(f))) ++ten;
    EXPECT_EQ(ten, 13u);
    for (const auto& [cr, set] : table)
        for (const auto& f : set) ASSERT_EQ(crossing_number(f), cr);
}

TEST(EnumerateTwoBridge, IndependentOfWorkers) {
    EXPECT_EQ(enumerate_two_bridge(12, 1), enumerate_two_bridge(12, 4));
}

TEST(EnumerateTwoBridge, ThreeWayEquivalence) {
    for (const auto& [cr, set] : enumerate_two_bridge(12)) {
        for (const auto& f : set) {
            auto a = even_cf_expand(f.p, f.q);
            LaurentPolyInt d = alexander_of(f);
            bool lk = abs(linking_number_with_axis(a)) == 1;
            ASSERT_EQ(lk, is_square_mod2(d)) << f.to_string();
            ASSERT_EQ(lk, is_one_mod2(d)) << f.to_string();
        }
    }
}

TEST(Conway, Mod2ReductionDevice) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> len(1, 6), term(-7, 7);
    for (int i = 0; i < 500; ++i) {
        std::vector<BigInt> a(2 * len(rng)), reduced;
        for (auto& x : a)
            do x = term(rng);
            while (x == 0);
        for (const auto& x : a) reduced.emplace_back(mpz_odd_p(x.get_mpz_t()) ? -1 : 0);
        ASSERT_EQ(conway_polynomial(a).mod2_normalized(), conway_polynomial(reduced).mod2_normalized());
    }
}

TEST(Alexander, AllMinusOneSequence) {
    for (int n = 2; n <= 16; n += 2) {
        std::vector<BigInt> a(n, -1);
        LaurentPolyInt d = alexander_from_conway(conway_polynomial(a));
        LaurentPolyInt shifted = d.shifted(-d.min_exponent());
        if (shifted.coeff(0) < 0) shifted = -shifted;
        LaurentPolyInt expect;
        for (int e = 0; e <= n; ++e) expect.add(e, e % 2 == 0 ? 1 : -1);
        ASSERT_EQ(shifted, expect) << n;
    }
}

TEST(TwoBridgeCsv, HeaderAndRows) {
    std::string csv = two_bridge_csv(enumerate_two_bridge(5));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "crossing,p,q,delta_mod2,lk");
    EXPECT_NE(csv.find("3,3,1,1+t+t^2,"), std::string::npos);
    EXPECT_EQ(csv.back(), '\n');
}

TEST(LaurentPoly, Format) {
    EXPECT_EQ(poly({{-1, -2}, {0, 5}, {1, -2}}).to_string("t"), "-2t^-1 + 5 - 2t");
    EXPECT_EQ(LaurentPolyInt().to_string("z"), "0");
}
