#include "knotforge/fourier.hpp"

#include "knotforge/errors.hpp"
#include "knotforge/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace knotforge {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

long double wrap(long double x, long double period) {
    long double r = std::fmod(x, period) + 0.0L;
    return r < 0 ? r + period : r;
}

}  // namespace

void validate(const FourierFrame& f) {
    if (f.n_x < 1 || f.n_y <= f.n_x) throw InvalidArgument("need 1 <= n_x < n_y");
    if (std::gcd(f.n_x, f.n_y) != 1) throw InvalidArgument("n_x and n_y must be coprime");
    if (f.n_z1 < 1 || f.n_z2 < 1) throw InvalidArgument("z frequencies must be positive");
    int g = std::gcd(f.n_z1, f.n_z2);
    if (std::gcd(g, f.n_x) != 1 || std::gcd(g, f.n_y) != 1)
        throw InvalidArgument("gcd(n_z1, n_z2) must be coprime to n_x and n_y");
    if (!std::isfinite(f.amp) || f.amp < 0) throw InvalidArgument("amplitude must be finite and non-negative");
    if (!std::isfinite(f.phi_y)) throw InvalidArgument("phi_y must be finite");
}

FourierSpec FourierSpec::make(int n_x, int n_y, long double phi_y, int n_z1, long double phi_z1, int n_z2,
                              long double phi_z2, long double amp) {
    FourierSpec s{{n_x, n_y, phi_y, n_z1, n_z2, amp}, phi_z1, phi_z2};
    validate(s.frame);
    if (!std::isfinite(phi_z1) || !std::isfinite(phi_z2)) throw InvalidArgument("phases must be finite");
    return s;
}

HeightTerms height_terms(const FourierFrame& f, const CrossingRecord& c) {
    HeightTerms h{};
    auto term = [&](int n, long double& s, long double& a, bool& zero) {
        if (c.kind == CrossingKind::TypeII) {
            zero = (static_cast<long>(n) * c.k) % f.n_y == 0;
            s = zero ? 0.0L : std::sin((static_cast<long>(n) * c.k % (2 * f.n_y)) * kPi / f.n_y);
            a = (static_cast<long>(n) * c.j % (2 * f.n_x)) * kPi / f.n_x;
        } else {
            zero = (static_cast<long>(n) * c.k) % f.n_x == 0;
            s = zero ? 0.0L : std::sin((static_cast<long>(n) * c.k % (2 * f.n_x)) * kPi / f.n_x);
            a = ((static_cast<long>(n) * c.j % (2 * f.n_y)) * kPi - n * f.phi_y) / f.n_y;
        }
    };
    term(f.n_z1, h.s1, h.a1, h.s1_zero);
    term(f.n_z2, h.s2, h.a2, h.s2_zero);
    return h;
}

long double fourier_height(const FourierSpec& spec, const CrossingRecord& c) {
    HeightTerms h = height_terms(spec.frame, c);
    return 2.0L * (h.s1 * std::sin(spec.phi_z1 + h.a1) + spec.frame.amp * h.s2 * std::sin(spec.phi_z2 + h.a2));
}

std::vector<CrossingRecord> resolve_fourier_heights(const FourierSpec& spec, std::vector<CrossingRecord> crossings,
                                                    long double tolerance) {
    for (auto& c : crossings) {
        long double d = fourier_height(spec, c);
        if (!(std::fabs(d) >= tolerance)) {
            std::ostringstream os;
            os << "(" << to_string(c.kind) << "," << c.k << "," << c.j << ") |dz| = " << std::fabs(d);
            throw NearSingular(os.str());
        }
        set_resolution(c, d > 0 ? 1 : -1);
    }
    return crossings;
}

PlanarDiagram fourier_diagram(const FourierSpec& spec, long double tolerance) {
    validate(spec.frame);
    auto crossings = enumerate_projection(spec.frame.n_x, spec.frame.n_y, RealPhase{spec.frame.phi_y});
    return build_diagram(spec.frame.n_x, spec.frame.n_y, resolve_fourier_heights(spec, std::move(crossings), tolerance));
}

KnotClass classify_fourier(const FourierSpec& spec, long double tolerance) {
    return classify_diagram(fourier_diagram(spec, tolerance));
}

std::string to_string(CurveKind kind) {
    switch (kind) {
        case CurveKind::VerticalLine: return "vertical";
        case CurveKind::HorizontalLine: return "horizontal";
        case CurveKind::DiagonalLine: return "diagonal";
        case CurveKind::SineCurve: return "sine";
    }
    return "?";
}

std::vector<SingularCurve> classify_singular_curves(const FourierFrame& frame) {
    validate(frame);
    std::vector<SingularCurve> out;
    for (const auto& c : enumerate_projection(frame.n_x, frame.n_y, RealPhase{frame.phi_y})) {
        HeightTerms h = height_terms(frame, c);
        SingularCurve base;
        base.source = c.key();
        bool second_absent = h.s2_zero || frame.amp == 0;
        if (h.s1_zero) {
            if (second_absent) continue;  // height is identically zero; never resolvable
            base.kind = CurveKind::HorizontalLine;
            base.c = wrap(-h.a2, kPi);
            out.push_back(base);
        } else if (second_absent) {
            base.kind = CurveKind::VerticalLine;
            base.c = wrap(-h.a1, kPi);
            out.push_back(base);
        } else {
            long double C = -frame.amp * h.s2 / h.s1;
            if (std::fabs(std::fabs(C) - 1.0L) < 1e-12L) {
                // sin(u) = sin(v) or sin(u) = -sin(v), u = phi1 + a1, v = phi2 + a2.
                base.kind = CurveKind::DiagonalLine;
                SingularCurve other = base;
                if (C > 0) {
                    base.slope_sign = 1;
                    base.c = wrap(h.a1 - h.a2, 2 * kPi);
                    other.slope_sign = -1;
                    other.c = wrap(kPi - h.a1 - h.a2, 2 * kPi);
                } else {
                    base.slope_sign = -1;
                    base.c = wrap(-h.a1 - h.a2, 2 * kPi);
                    other.slope_sign = 1;
                    other.c = wrap(h.a1 - h.a2 - kPi, 2 * kPi);
                }
                out.push_back(base);
                out.push_back(other);
            } else {
                base.kind = CurveKind::SineCurve;
                base.C = C;
                base.offset1 = wrap(h.a1, 2 * kPi);
                base.offset2 = wrap(h.a2, 2 * kPi);
                out.push_back(base);
            }
        }
    }
    return out;
}

namespace {

struct Point {
    long double x, y;  // (phi_z1, phi_z2)
};

using Polyline = std::vector<Point>;

// Samples a graph y = g(x) (or x = g(y) when transposed) over [0, pi],
// subdividing until neighbouring samples are closer than max_step.
void trace_graph(const std::function<long double(long double)>& g, bool transposed, long double max_step,
                 std::vector<Polyline>& out) {
    const int base = 64;
    Polyline line;
    auto emit = [&](long double p, long double v) { line.push_back(transposed ? Point{v, p} : Point{p, v}); };
    auto refine = [&](auto&& self, long double p0, long double v0, long double p1, long double v1, int depth) -> void {
        if (depth < 40 && (std::fabs(v1 - v0) > max_step || p1 - p0 > max_step)) {
            long double pm = (p0 + p1) / 2;
            long double vm = g(pm);
            self(self, p0, v0, pm, vm, depth + 1);
            self(self, pm, vm, p1, v1, depth + 1);
            return;
        }
        emit(p1, v1);
    };
    long double p0 = 0, v0 = g(0);
    emit(p0, v0);
    for (int i = 1; i <= base; ++i) {
        long double p1 = kPi * i / base;
        long double v1 = g(p1);
        refine(refine, p0, v0, p1, v1, 0);
        p0 = p1;
        v0 = v1;
    }
    // Drop branches that never enter the domain.
    bool inside = std::any_of(line.begin(), line.end(), [](const Point& q) {
        return q.x >= -1e-9L && q.x <= kPi + 1e-9L && q.y >= -1e-9L && q.y <= kPi + 1e-9L;
    });
    if (inside) out.push_back(std::move(line));
}

std::vector<Polyline> trace_curve(const SingularCurve& c, long double max_step) {
    std::vector<Polyline> out;
    switch (c.kind) {
        case CurveKind::VerticalLine:
            for (long double x = c.c; x <= kPi + 1e-12L; x += kPi) out.push_back({{x, 0}, {x, kPi}});
            break;
        case CurveKind::HorizontalLine:
            for (long double y = c.c; y <= kPi + 1e-12L; y += kPi) out.push_back({{0, y}, {kPi, y}});
            break;
        case CurveKind::DiagonalLine:
            for (int m = -2; m <= 2; ++m) {
                long double shift = c.c + 2 * kPi * m;
                int slope = c.slope_sign;
                trace_graph([shift, slope](long double p) { return slope * p + shift; }, false, max_step, out);
            }
            break;
        case CurveKind::SineCurve: {
            bool steep = std::fabs(c.C) > 1;  // solve for phi_z2 as a function of phi_z1
            for (int m = -2; m <= 2; ++m) {
                for (int branch = 0; branch < 2; ++branch) {
                    auto g = [&c, steep, m, branch](long double p) {
                        long double v = steep ? std::sin(p + c.offset1) / c.C : c.C * std::sin(p + c.offset2);
                        long double s = std::asin(std::clamp(v, -1.0L, 1.0L));
                        long double base = branch == 0 ? s : kPi - s;
                        return base - (steep ? c.offset2 : c.offset1) + 2 * kPi * m;
                    };
                    trace_graph(g, !steep, max_step, out);
                }
            }
            break;
        }
    }
    return out;
}

void bresenham(Bitmap& b, int x0, int y0, int x1, int y1) {
    int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
    int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    const int r = b.resolution;
    while (true) {
        if (x0 >= 0 && x0 < r && y0 >= 0 && y0 < r) b.wall[static_cast<std::size_t>(y0) * r + x0] = 1;
        if (x0 == x1 && y0 == y1) break;
        int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y0 += sy;
        }
    }
}

int to_pixel(long double phase, int resolution) {
    long double u = phase / kPi * resolution;
    if (u < -4 * resolution) return -4 * resolution;
    if (u > 5 * resolution) return 5 * resolution;
    int p = static_cast<int>(std::floor(u));
    // A point exactly on the upper edge belongs to the last pixel.
    if (p == resolution && u == resolution) p = resolution - 1;
    return p;
}

}  // namespace

Bitmap rasterize_curves(const std::vector<SingularCurve>& curves, int resolution) {
    if (resolution < 1) throw InvalidArgument("resolution must be positive");
    Bitmap b;
    b.resolution = resolution;
    b.wall.assign(static_cast<std::size_t>(resolution) * resolution, 0);
    const long double step = kPi / resolution / 2;
    for (const auto& c : curves) {
        for (const auto& line : trace_curve(c, step)) {
            for (std::size_t i = 0; i + 1 < line.size(); ++i) {
                bresenham(b, to_pixel(line[i].x, resolution), to_pixel(line[i].y, resolution),
                          to_pixel(line[i + 1].x, resolution), to_pixel(line[i + 1].y, resolution));
            }
        }
    }
    return b;
}

std::string bitmap_to_pgm(const Bitmap& b) {
    std::ostringstream os;
    os << "P2\n" << b.resolution << ' ' << b.resolution << "\n255\n";
    for (int y = b.resolution - 1; y >= 0; --y) {
        for (int x = 0; x < b.resolution; ++x) os << (x ? " " : "") << (b.at(x, y) ? 0 : 255);
        os << '\n';
    }
    return os.str();
}

std::string curves_to_svg(const std::vector<SingularCurve>& curves, int size) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    const long double scale = size / kPi;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\" stroke=\"black\"/>\n";
    for (const auto& c : curves) {
        for (const auto& line : trace_curve(c, kPi / 400)) {
            os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
            for (const auto& p : line) os << static_cast<double>(p.x * scale) << ',' << static_cast<double>(size - p.y * scale) << ' ';
            os << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::vector<PhaseSample> regions_of(const Bitmap& b) {
    const int r = b.resolution;
    std::vector<int> label(static_cast<std::size_t>(r) * r, -1);
    std::vector<PhaseSample> out;
    std::deque<int> queue;
    std::vector<int> pixels;
    for (int start = 0; start < r * r; ++start) {
        if (b.wall[start] || label[start] >= 0) continue;
        int id = static_cast<int>(out.size());
        pixels.clear();
        label[start] = id;
        queue.push_back(start);
        long double sx = 0, sy = 0;
        while (!queue.empty()) {
            int p = queue.front();
            queue.pop_front();
            pixels.push_back(p);
            int x = p % r, y = p / r;
            sx += x + 0.5L;
            sy += y + 0.5L;
            const int nbr[4][2] = {{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}};
            for (const auto& n : nbr) {
                if (n[0] < 0 || n[0] >= r || n[1] < 0 || n[1] >= r) continue;
                int q = n[1] * r + n[0];
                if (b.wall[q] || label[q] >= 0) continue;
                label[q] = id;
                queue.push_back(q);
            }
        }
        long double cx = sx / pixels.size(), cy = sy / pixels.size();
        int px = std::min(r - 1, static_cast<int>(cx)), py = std::min(r - 1, static_cast<int>(cy));
        PhaseSample s;
        s.pixels = pixels.size();
        if (label[static_cast<std::size_t>(py) * r + px] == id) {
            s.phi_z1 = cx / r * kPi;
            s.phi_z2 = cy / r * kPi;
        } else {
            // The centroid fell outside the region; use the nearest member pixel.
            int best = pixels.front();
            long double best_d = -1;
            for (int p : pixels) {
                long double dx = p % r + 0.5L - cx, dy = p / r + 0.5L - cy;
                long double d = dx * dx + dy * dy;
                if (best_d < 0 || d < best_d) best_d = d, best = p;
            }
            s.phi_z1 = (best % r + 0.5L) / r * kPi;
            s.phi_z2 = (best / r + 0.5L) / r * kPi;
        }
        out.push_back(s);
    }
    return out;
}

std::vector<PhaseSample> bitmap_sample_fourier(const FourierFrame& frame, int resolution) {
    if (resolution < 50) throw InvalidArgument("resolution must be at least 50");
    return regions_of(rasterize_curves(classify_singular_curves(frame), resolution));
}

std::uint64_t CounterRng::next() {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(seed_ ^ mix(stream_)) + counter_++);
}

long double CounterRng::uniform(long double lo, long double hi) {
    long double u = static_cast<long double>(next() >> 11) * 0x1.0p-53L;
    return lo + (hi - lo) * u;
}

int CounterRng::uniform_int(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
}

std::vector<int> frequency_tuple(const FourierSpec& s) {
    return {s.frame.n_x, s.frame.n_y, s.frame.n_z1, s.frame.n_z2};
}

FourierSpec draw_fourier_sample(int n_y, std::uint64_t rng_seed, std::uint64_t index, const SamplingOptions& o) {
    CounterRng rng(rng_seed, (o.batch_index << 32) ^ index);
    int k = rng.uniform_int(1, 6);
    int n1, n2;
    while (true) {
        n1 = rng.uniform_int(1, o.zmax - 1);
        n2 = rng.uniform_int(1, o.zmax - 1);
        if (n1 == n2) continue;
        if (n1 > n2) std::swap(n1, n2);
        int g = std::gcd(n1, n2);
        if (std::gcd(g, o.n_x) == 1 && std::gcd(g, n_y) == 1) break;
    }
    long double phi1 = rng.uniform(0, kPi);
    long double phi2 = rng.uniform(0, 2 * kPi);
    long double amp = rng.uniform(0, o.amp_max);
    return FourierSpec::make(o.n_x, n_y, k * kPi / 7, n1, phi1, n2, phi2, amp);
}

BatchResult random_sample_fourier(int n_y, std::uint64_t rng_seed, std::size_t batch_size,
                                  const SamplingOptions& o, const std::set<std::string>* known) {
    if (o.zmax < 3) throw InvalidArgument("zmax must be at least 3");
    if (std::gcd(o.n_x, n_y) != 1 || n_y <= o.n_x) throw InvalidArgument("bad (n_x, n_y)");
    struct Slot {
        bool valid = false;
        bool near_singular = false;
        FourierFind find;
    };
    std::vector<Slot> slots(batch_size);
    parallel_for(batch_size, o.workers, [&](std::size_t i) {
        FourierSpec spec = draw_fourier_sample(n_y, rng_seed, i, o);
        Slot& slot = slots[i];
        try {
            KnotClass kc = classify_fourier(spec, o.tolerance);
            if (kc.is_unknot()) return;
            int cr = kc.fraction ? crossing_number(*kc.fraction) : 0;
            if (kc.fraction && cr > o.max_crossing) return;
            slot.valid = true;
            slot.find = {spec, kc.identity, cr};
        } catch (const NearSingular&) {
            slot.near_singular = true;
        }
    });

    BatchResult result;
    result.sampled = batch_size;
    std::map<std::string, FourierFind> best;
    for (const Slot& s : slots) {
        if (s.near_singular) ++result.near_singular;
        if (!s.valid || (known && known->count(s.find.identity))) continue;
        auto it = best.find(s.find.identity);
        // Earlier samples win ties, so the outcome is independent of worker count.
        if (it == best.end() || frequency_tuple(s.find.spec) < frequency_tuple(it->second.spec))
            best[s.find.identity] = s.find;
    }
    for (auto& [id, f] : best) result.finds.push_back(std::move(f));
    return result;
}

FourierSpec twist_knot_spec(int m) {
    if (m >= 5 && m % 4 == 1) {
        int n = (m - 1) / 4;
        long double phi2 = ((8 * n + 1) + (8 * n + 5) * kPi) / (2.0L * (8 * n + 3));
        return FourierSpec::make(2, 8 * n + 3, 0.5L, 2, kPi / 4, 8 * n + 1, phi2, 1.0L);
    }
    if (m >= 2 && m % 2 == 0) {
        int n = m / 2;
        long double phi2 = ((2 * n + 3) - 3 * kPi) / (2.0L * (2 * n + 1));
        return FourierSpec::make(2, 2 * n + 1, 0.5L, 2, kPi / 4, 2 * n + 3, phi2, 1.0L);
    }
    throw UnsupportedResidue("m = " + std::to_string(m) + " is not covered by either twist family");
}

FourierSpec torus_knot_spec(int p, int q) {
    if (p == 2) {
        if (q < 3 || q % 2 == 0) throw InvalidArgument("T(2,q) needs odd q >= 3");
        return FourierSpec::make(2, q, kPi / 4, 2, kPi / 2, q - 2, kPi / 4, 1.0L);
    }
    struct Row {
        int p, q, n1, n2, phi_y_den;
        long double phi1, phi2;
    };
    static const Row rows[] = {
        {3, 4, 1, 3, 6, 0.26389L, 1.58336L}, {3, 5, 2, 3, 6, 0.31415L, 1.58336L},
        {3, 7, 3, 4, 6, 1.57079L, 0.37699L}, {4, 5, 1, 4, 8, 0.40212L, 1.58336L},
        {3, 8, 3, 5, 6, 1.57079L, 0.40212L},
    };
    for (const Row& r : rows)
        if (r.p == p && r.q == q) return FourierSpec::make(p, q, kPi / r.phi_y_den, r.n1, r.phi1, r.n2, r.phi2, 1.0L);
    throw NoKnownPhases("T(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

}  // namespace knotforge
