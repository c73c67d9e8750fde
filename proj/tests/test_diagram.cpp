#include "knotforge/diagram.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/fourier.hpp"
#include "knotforge/lissajous.hpp"
#include "knotforge/twobridge.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace knotforge;

namespace {

// Polynomials over GF(2) as coefficient vectors, multiplied the schoolbook way.
using Bits = std::vector<int>;

Bits trim(Bits b) {
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
}

Bits bits_mul(const Bits& a, const Bits& b) {
    if (a.empty() || b.empty()) return {};
    Bits out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= a[i] & b[j];
    return trim(out);
}

Bits bits_add(Bits a, const Bits& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
    return trim(a);
}

Gf2Poly to_poly(const Bits& b) {
    Gf2Poly p;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i]) p = p + Gf2Poly::monomial(static_cast<int>(i));
    return p;
}

Bits random_bits(std::mt19937_64& rng, int max_degree) {
    Bits b(std::uniform_int_distribution<int>(0, max_degree + 1)(rng));
    for (auto& x : b) x = static_cast<int>(rng() & 1);
    return trim(b);
}

// Determinant over GF(2) by the Leibniz sum; signs vanish in characteristic 2.
Bits leibniz(const std::vector<std::vector<Bits>>& m) {
    std::vector<int> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    Bits sum;
    do {
        Bits term{1};
        for (std::size_t i = 0; i < m.size(); ++i) term = bits_mul(term, m[i][perm[i]]);
        sum = bits_add(sum, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

// Passages of the standard three-crossing trefoil: pairs (1,4), (3,6), (5,2), alternating.
PlanarDiagram standard_trefoil() {
    PlanarDiagram d;
    d.crossings.resize(3);
    const int crossing_of[6] = {0, 2, 1, 0, 2, 1};
    for (int i = 0; i < 6; ++i) d.passages.push_back({crossing_of[i], i % 2 == 0});
    for (auto& c : d.crossings) c.sign = 1;
    return d;
}

void expect_valid_dt(const DTCode& code, std::size_t n) {
    ASSERT_EQ(code.labels.size(), n);
    std::vector<long> abs_labels;
    for (long l : code.labels) {
        ASSERT_EQ(std::labs(l) % 2, 0);
        abs_labels.push_back(std::labs(l));
    }
    std::sort(abs_labels.begin(), abs_labels.end());
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(abs_labels[i], static_cast<long>(2 * (i + 1)));
}

long double rad(const PiRational& p) { return p.radians(); }

}  // namespace

TEST(Gf2Poly, ArithmeticMatchesSchoolbook) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 400; ++i) {
        Bits a = random_bits(rng, 150), b = random_bits(rng, 90);
        EXPECT_EQ(to_poly(a) * to_poly(b), to_poly(bits_mul(a, b)));
        EXPECT_EQ(to_poly(a) + to_poly(b), to_poly(bits_add(a, b)));
        if (b.empty()) continue;
        Gf2Poly q, r;
        to_poly(a).divmod(to_poly(b), q, r);
        EXPECT_EQ(q * to_poly(b) + r, to_poly(a));
        EXPECT_LT(r.degree(), to_poly(b).degree());
        EXPECT_EQ((to_poly(a) * to_poly(b)).divide_exact(to_poly(b)), to_poly(a));
    }
}

TEST(Gf2Poly, Format) {
    EXPECT_EQ(Gf2Poly::from_bits({0, 1, 2}).to_string(), "1+t+t^2");
    EXPECT_EQ(Gf2Poly().to_string(), "0");
    EXPECT_EQ(Gf2Poly::from_bits({5, 7}).shifted_down(5), Gf2Poly::from_bits({0, 2}));
    EXPECT_TRUE(Gf2Poly::from_bits({0, 2, 130}).is_square());
    EXPECT_FALSE(Gf2Poly::from_bits({0, 129}).is_square());
}

TEST(Gf2Determinant, MatchesLeibniz) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + trial % 6;
        std::vector<std::vector<Bits>> m(n, std::vector<Bits>(n));
        std::vector<std::vector<Gf2Poly>> p(n, std::vector<Gf2Poly>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m[i][j] = random_bits(rng, 4);
                p[i][j] = to_poly(m[i][j]);
            }
        EXPECT_EQ(gf2_determinant(p), to_poly(leibniz(m))) << n;
    }
}

TEST(DtCode, StandardTrefoil) {
    PlanarDiagram d = standard_trefoil();
    ASSERT_EQ(oracle::dt_string(oracle::dt_labels({{0, true}, {2, false}, {1, true}, {0, false}, {2, true}, {1, false}})),
              "4 6 2");
    EXPECT_EQ(dt_code(d).to_string(), "4 6 2");
    EXPECT_EQ(alexander_mod2_from_diagram(d), Gf2Poly::from_bits({0, 1, 2}));
    EXPECT_EQ(writhe(d), 3);
}

TEST(DtCode, MalformedDiagrams) {
    PlanarDiagram d = standard_trefoil();
    d.passages.pop_back();
    EXPECT_THROW(dt_code(d), MalformedDiagram);
    // Crossing 0 at passages 1 and 3.
    PlanarDiagram same_parity;
    same_parity.crossings.resize(2);
    same_parity.passages = {{0, true}, {1, false}, {0, false}, {1, true}};
    EXPECT_THROW(dt_code(same_parity), MalformedDiagram);
    PlanarDiagram triple = standard_trefoil();
    triple.passages[1].crossing = 0;
    EXPECT_THROW(dt_code(triple), MalformedDiagram);
}

TEST(DtCode, TrefoilFromTorusGenerator) {
    FourierSpec s = torus_knot_spec(2, 3);
    PlanarDiagram d = fourier_diagram(s);
    const FourierFrame& f = s.frame;
    auto sampled = oracle::sample_diagram(
        oracle::fourier_curve(f.n_x, f.n_y, f.phi_y, f.n_z1, s.phi_z1, f.n_z2, s.phi_z2, f.amp), 40000);
    ASSERT_EQ(sampled.crossings.size(), 7u);
    EXPECT_EQ(dt_code(d).to_string(), oracle::dt_string(oracle::dt_labels(sampled.passages)));
    // A 7-crossing projection cannot carry the literal 3-crossing code, so the
    // knot type is checked through its invariants instead.
    EXPECT_EQ(oracle::knot_determinant(sampled.passages, 7), 3);
    EXPECT_EQ(alexander_mod2_from_diagram(d), Gf2Poly::from_bits({0, 1, 2}));
    EXPECT_EQ(classify_fourier(s).identity, "3/1");
}

TEST(DtCode, MatchesSampledCurveOnLissajousFaces) {
    for (auto [nx, ny, nz] : {std::tuple{2, 3, 5}, {3, 4, 7}, {2, 5, 7}}) {
        int n = 2 * nx * ny - nx - ny;
        for (const auto& r : decompose_phase_torus(nx, ny, nz)) {
            LissajousSpec spec = LissajousSpec::make(nx, ny, nz, r.phi_y, r.phi_z);
            PlanarDiagram d = extract_diagram(spec);
            auto sampled = oracle::sample_diagram(oracle::lissajous_curve(nx, ny, nz, rad(r.phi_y), rad(r.phi_z)), 20000);
            ASSERT_EQ(static_cast<int>(sampled.crossings.size()), n);
            DTCode code = dt_code(d);
            expect_valid_dt(code, n);
            EXPECT_EQ(code.to_string(), oracle::dt_string(oracle::dt_labels(sampled.passages)))
                << nx << "," << ny << "," << nz << " " << r.phi_y.to_string() << " " << r.phi_z.to_string();
            int w = 0;
            for (const auto& c : sampled.crossings) w += c.sign;
            EXPECT_EQ(writhe(d), w);
        }
    }
}

TEST(DtCode, LargeDiagram) {
    LissajousSpec spec = LissajousSpec::make(2, 99, 101, PiRational::of(1, 997), PiRational::of(3, 1009));
    PlanarDiagram d = extract_diagram(spec);
    ASSERT_EQ(d.crossing_count(), 295);
    DTCode code = dt_code(d);
    expect_valid_dt(code, 295);
    EXPECT_EQ(code.hash_hex().size(), 16u);
}

TEST(AlexanderMod2, UnknotFaceIsOne) {
    int unknots = 0;
    for (const auto& r : decompose_phase_torus(2, 3, 5)) {
        LissajousSpec spec = LissajousSpec::make(2, 3, 5, r.phi_y, r.phi_z);
        KnotClass k = classify(spec);
        if (!k.is_unknot()) continue;
        ++unknots;
        PlanarDiagram d = extract_diagram(spec);
        EXPECT_GT(d.crossing_count(), 0);
        EXPECT_EQ(alexander_mod2_from_diagram(d), Gf2Poly::one());
        auto sampled = oracle::sample_diagram(oracle::lissajous_curve(2, 3, 5, rad(r.phi_y), rad(r.phi_z)), 20000);
        EXPECT_EQ(oracle::knot_determinant(sampled.passages, static_cast<int>(sampled.crossings.size())), 1);
    }
    EXPECT_GT(unknots, 0);
}

TEST(AlexanderMod2, AgreesWithTwoBridgeModule) {
    for (auto [ny, nz] : {std::pair{3, 5}, {5, 7}, {7, 9}, {5, 13}}) {
        for (const auto& r : decompose_phase_torus(2, ny, nz)) {
            LissajousSpec spec = LissajousSpec::make(2, ny, nz, r.phi_y, r.phi_z);
            KnotClass k = classify(spec);
            ASSERT_TRUE(k.fraction);
            EXPECT_EQ(alexander_mod2_from_diagram(extract_diagram(spec)), alexander_of(*k.fraction).mod2_normalized())
                << ny << "," << nz << " " << k.identity;
        }
    }
}

TEST(AlexanderMod2, KnotDeterminantIsFractionNumerator) {
    // The colouring determinant of the sampled curve is an invariant computed
    // without the library; it must equal p for K(p/q).
    for (auto [ny, nz] : {std::pair{3, 5}, {5, 7}, {3, 11}}) {
        for (const auto& r : decompose_phase_torus(2, ny, nz)) {
            LissajousSpec spec = LissajousSpec::make(2, ny, nz, r.phi_y, r.phi_z);
            KnotClass k = classify(spec);
            auto sampled = oracle::sample_diagram(oracle::lissajous_curve(2, ny, nz, rad(r.phi_y), rad(r.phi_z)), 20000);
            EXPECT_EQ(oracle::knot_determinant(sampled.passages, static_cast<int>(sampled.crossings.size())),
                      k.fraction->p)
                << k.identity;
        }
    }
}

TEST(AlexanderMod2, SquareOnEveryFace) {
    for (auto [nx, ny, nz] : {std::tuple{2, 3, 5}, {2, 5, 7}, {3, 4, 23}, {3, 5, 29}}) {
        int faces = 0;
        for (const auto& r : decompose_phase_torus(nx, ny, nz)) {
            LissajousSpec spec = LissajousSpec::make(nx, ny, nz, r.phi_y, r.phi_z);
            Gf2Poly a = alexander_mod2_from_diagram(extract_diagram(spec));
            ASSERT_TRUE(a.is_square()) << nx << "," << ny << "," << nz << " " << a.to_string();
            ASSERT_TRUE(a.coeff(0));
            ++faces;
        }
        EXPECT_GT(faces, 0) << nx << "," << ny << "," << nz;
    }
}

TEST(Writhe, SumOfSigns) {
    FourierSpec s = twist_knot_spec(2);
    PlanarDiagram d = fourier_diagram(s);
    int w = 0;
    for (const auto& c : d.crossings) w += c.sign;
    EXPECT_EQ(writhe(d), w);
}
