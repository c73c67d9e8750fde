#pragma once

#include "knotforge/diagram.hpp"
#include "knotforge/lissajous.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace knotforge {

// Everything but the two z phases: one point of view on the phase torus.
struct FourierFrame {
    int n_x = 2;
    int n_y = 3;
    long double phi_y = 0.0L;
    int n_z1 = 1;
    int n_z2 = 2;
    long double amp = 1.0L;  // amplitude of the second z term; the first is 1
};

// z(t) = cos(n_z1 t + phi_z1) + amp * cos(n_z2 t + phi_z2).
struct FourierSpec {
    FourierFrame frame;
    long double phi_z1 = 0.0L;
    long double phi_z2 = 0.0L;

    static FourierSpec make(int n_x, int n_y, long double phi_y, int n_z1, long double phi_z1, int n_z2,
                            long double phi_z2, long double amp = 1.0L);
};

void validate(const FourierFrame& frame);

// Height difference z(t1) - z(t2) as s1 sin(phi_z1 + a1) + amp s2 sin(phi_z2 + a2), times 2.
struct HeightTerms {
    long double s1, a1, s2, a2;
    bool s1_zero, s2_zero;  // decided exactly from the frequencies
};

HeightTerms height_terms(const FourierFrame& frame, const CrossingRecord& c);
long double fourier_height(const FourierSpec& spec, const CrossingRecord& c);

std::vector<CrossingRecord> resolve_fourier_heights(const FourierSpec& spec, std::vector<CrossingRecord> crossings,
                                                    long double tolerance = kDefaultTolerance);

PlanarDiagram fourier_diagram(const FourierSpec& spec, long double tolerance = kDefaultTolerance);
KnotClass classify_fourier(const FourierSpec& spec, long double tolerance = kDefaultTolerance);

enum class CurveKind { VerticalLine, HorizontalLine, DiagonalLine, SineCurve };

std::string to_string(CurveKind kind);

// Zero set of one crossing's height difference in the (phi_z1, phi_z2) plane.
//   VerticalLine:   phi_z1 = c (mod pi)
//   HorizontalLine: phi_z2 = c (mod pi)
//   DiagonalLine:   phi_z2 = slope_sign * phi_z1 + c (mod 2 pi)
//   SineCurve:      sin(phi_z1 + offset1) = C sin(phi_z2 + offset2)
struct SingularCurve {
    CurveKind kind = CurveKind::VerticalLine;
    long double c = 0.0L;
    int slope_sign = 0;
    long double C = 0.0L;
    long double offset1 = 0.0L;
    long double offset2 = 0.0L;
    CrossingKey source;
};

std::vector<SingularCurve> classify_singular_curves(const FourierFrame& frame);

// Wall bitmap over [0,pi]^2; x indexes phi_z1, y indexes phi_z2.
struct Bitmap {
    int resolution = 0;
    std::vector<std::uint8_t> wall;  // row-major, y * resolution + x

    bool at(int x, int y) const { return wall[static_cast<std::size_t>(y) * resolution + x] != 0; }
};

Bitmap rasterize_curves(const std::vector<SingularCurve>& curves, int resolution);
std::string bitmap_to_pgm(const Bitmap& bitmap);
std::string curves_to_svg(const std::vector<SingularCurve>& curves, int size = 500);

struct PhaseSample {
    long double phi_z1 = 0.0L;
    long double phi_z2 = 0.0L;
    std::size_t pixels = 0;
};

std::vector<PhaseSample> regions_of(const Bitmap& bitmap);
std::vector<PhaseSample> bitmap_sample_fourier(const FourierFrame& frame, int resolution);

// Counter-based generator: the value is a pure function of (seed, stream, counter).
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}
    std::uint64_t next();
    long double uniform(long double lo, long double hi);  // [lo, hi)
    int uniform_int(int lo, int hi);                      // [lo, hi]

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

struct SamplingOptions {
    int n_x = 2;
    int zmax = 301;             // frequencies satisfy 0 < n_z1 < n_z2 < zmax
    long double amp_max = 2.0L;
    int max_crossing = 16;      // keep knots with crossing number at most this
    int workers = 1;
    std::uint64_t batch_index = 0;
    long double tolerance = kDefaultTolerance;
};

struct FourierFind {
    FourierSpec spec;
    std::string identity;
    int crossing_number = 0;
};

struct BatchResult {
    std::vector<FourierFind> finds;  // one per new identity, sorted by identity
    std::size_t sampled = 0;
    std::size_t near_singular = 0;
};

// Parameters of sample `index` in batch `options.batch_index`; a pure function of its arguments.
FourierSpec draw_fourier_sample(int n_y, std::uint64_t rng_seed, std::uint64_t index, const SamplingOptions& options);

// Frequency tuple used for the smallest-representative rule.
std::vector<int> frequency_tuple(const FourierSpec& spec);

BatchResult random_sample_fourier(int n_y, std::uint64_t rng_seed, std::size_t batch_size,
                                  const SamplingOptions& options = {}, const std::set<std::string>* known = nullptr);

FourierSpec twist_knot_spec(int m);
FourierSpec torus_knot_spec(int p, int q);

}  // namespace knotforge
