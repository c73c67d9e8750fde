#include "knotforge/lissajous.hpp"

#include "knotforge/errors.hpp"
#include "knotforge/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace knotforge {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

// Number-type shims so the projection formulas serve both paths.
int sgn_sin(const BigRational& c) { return sin_sign(PiRational(c)); }
int sgn_sin(long double c) {
    long double s = std::sin(c * kPi);
    return (s > 0) - (s < 0);
}
BigInt floor_num(const BigRational& r) { return floor_of(r); }
long floor_num(long double r) { return static_cast<long>(std::floor(r)); }
long double to_ld(const BigRational& r) { return PiRational(r).radians() / kPi; }
long to_long(const BigInt& v) { return v.get_si(); }
long to_long(long v) { return v; }

CurveTime make_time(const BigRational& coeff) { return {PiRational(coeff), PiRational(coeff).radians()}; }
CurveTime make_time(long double coeff) { return {std::nullopt, coeff * kPi}; }

template <class R>
void fill_fold(CrossingRecord& c, const R& angle);

template <>
void fill_fold<BigRational>(CrossingRecord& c, const BigRational& angle) {
    BigRational f = cos_fold(PiRational(angle));
    c.x_fold_exact = f;
    c.x_fold = to_ld(f);
}

template <>
void fill_fold<long double>(CrossingRecord& c, const long double& angle) {
    long double m = std::fmod(angle, 2.0L);
    if (m < 0) m += 2.0L;
    c.x_fold = m > 1.0L ? 2.0L - m : m;
}

template <class R>
R lift(const BigRational& q);
template <>
BigRational lift<BigRational>(const BigRational& q) { return q; }
template <>
long double lift<long double>(const BigRational& q) { return to_ld(q); }

BigRational ratio(long num, long den) {
    BigRational r{BigInt(num), BigInt(den)};
    r.canonicalize();
    return r;
}

// Double points for phi_y = a*pi with a of type R.
template <class R>
std::vector<CrossingRecord> projection_crossings(int nx, int ny, const R& a) {
    std::vector<CrossingRecord> out;
    out.reserve(static_cast<std::size_t>(2 * nx * ny));
    for (int k = 1; k <= nx - 1; ++k) {
        const BigRational nyk_nx = ratio(ny * k, nx);
        long lo = to_long(floor_num(R(lift<R>(nyk_nx) + a))) + 1;
        long hi = to_long(floor_num(R(lift<R>(BigRational(2 * ny - nyk_nx)) + a)));
        const int s_c = sin_sign(PiRational(nyk_nx));
        const R half_gap = lift<R>(ratio(k, nx));
        for (long j = lo; j <= hi; ++j) {
            CrossingRecord c;
            c.kind = CrossingKind::TypeI;
            c.k = k;
            c.j = static_cast<int>(j);
            const R mid = R(R(lift<R>(BigRational(j)) - a) / lift<R>(BigRational(ny)));
            c.t1 = make_time(R(mid - half_gap));
            c.t2 = make_time(R(mid + half_gap));
            const R theta = R(lift<R>(BigRational(nx)) * mid);
            fill_fold<R>(c, R(theta - lift<R>(BigRational(k))));
            const int parity = ((k + j) % 2 == 0) ? 1 : -1;
            c.tangent_orientation = parity * sgn_sin(theta) * s_c;
            out.push_back(std::move(c));
        }
    }
    for (int k = 1; k <= ny - 1; ++k) {
        const BigRational nxk_ny = ratio(nx * k, ny);
        long lo = to_long(floor_of(nxk_ny)) + 1;
        long hi = to_long(floor_of(BigRational(2 * nx - nxk_ny)));
        const int s_d = sin_sign(PiRational(nxk_ny));
        const BigRational half_gap = ratio(k, ny);
        for (long j = lo; j <= hi; ++j) {
            CrossingRecord c;
            c.kind = CrossingKind::TypeII;
            c.k = k;
            c.j = static_cast<int>(j);
            const BigRational mid = ratio(j, nx);
            // Type II times do not depend on phi_y, so they stay exact even
            // on the float path; only the exact path keeps them as rationals.
            c.t1 = make_time(BigRational(mid - half_gap));
            c.t2 = make_time(BigRational(mid + half_gap));
            if constexpr (std::is_same_v<R, long double>) {
                c.t1.exact.reset();
                c.t2.exact.reset();
            }
            fill_fold<BigRational>(c, BigRational(BigRational(j) - nxk_ny));
            const R psi = R(lift<R>(ratio(static_cast<long>(ny) * j, nx)) + a);
            const int parity = ((k + j) % 2 == 0) ? 1 : -1;
            c.tangent_orientation = -parity * s_d * sgn_sin(psi);
            out.push_back(std::move(c));
        }
    }
    return out;
}

void check_frequencies(int nx, int ny) {
    if (nx < 1 || ny <= nx) throw InvalidArgument("need 1 <= n_x < n_y");
    if (std::gcd(nx, ny) != 1) throw InvalidArgument("n_x and n_y must be coprime");
}

}  // namespace

long double default_tolerance() {
    const char* env = std::getenv("KNOTFORGE_TOLERANCE");
    if (env == nullptr || *env == '\0') return kDefaultTolerance;
    char* end = nullptr;
    long double v = std::strtold(env, &end);
    if (end == env || !(v > 0)) return kDefaultTolerance;
    return v;
}

long double phase_radians(const Phase& p) {
    if (const auto* e = std::get_if<PiRational>(&p)) return e->radians();
    return std::get<RealPhase>(p).value;
}

std::string phase_to_string(const Phase& p) {
    if (const auto* e = std::get_if<PiRational>(&p)) return e->to_string();
    std::ostringstream os;
    os.precision(21);
    os << std::get<RealPhase>(p).value;
    return os.str();
}

LissajousSpec LissajousSpec::make(int n_x, int n_y, int n_z, Phase phi_y, Phase phi_z) {
    check_frequencies(n_x, n_y);
    if (n_z < 1) throw InvalidArgument("n_z must be positive");
    if (std::gcd(n_x, n_z) != 1 || std::gcd(n_y, n_z) != 1)
        throw InvalidArgument("frequencies must be pairwise coprime");
    for (const Phase* p : {&phi_y, &phi_z})
        if (const auto* r = std::get_if<RealPhase>(p); r && !std::isfinite(r->value))
            throw InvalidArgument("phase must be finite");
    return {n_x, n_y, n_z, std::move(phi_y), std::move(phi_z)};
}

std::vector<CrossingRecord> enumerate_projection(int n_x, int n_y, const Phase& phi_y) {
    check_frequencies(n_x, n_y);
    if (const auto* e = std::get_if<PiRational>(&phi_y)) {
        BigRational a = e->coeff();
        if (BigRational(a * n_x).get_den() == 1) throw DegenerateProjection("phi_y = " + e->to_string() + " pi");
        return projection_crossings<BigRational>(n_x, n_y, a);
    }
    long double a = std::get<RealPhase>(phi_y).value / kPi;
    long double s = a * n_x;
    if (std::fabs(s - std::nearbyint(s)) < 1e-12L) throw DegenerateProjection("phi_y is a multiple of pi/n_x");
    return projection_crossings<long double>(n_x, n_y, a);
}

void set_resolution(CrossingRecord& c, int height_sign) {
    c.over_first = height_sign > 0;
    c.sign = c.over_first ? c.tangent_orientation : -c.tangent_orientation;
}

namespace {

std::string crossing_label(const CrossingRecord& c) {
    return "(" + to_string(c.kind) + "," + std::to_string(c.k) + "," + std::to_string(c.j) + ")";
}

// Exact sign of z(t1) - z(t2) for phases a*pi, b*pi.
int exact_height_sign(int nx, int ny, int nz, const BigRational& a, const BigRational& b, const CrossingRecord& c) {
    if (c.kind == CrossingKind::TypeI) {
        BigRational arg = BigRational(nz) * (BigRational(c.j) - a) / ny + b;
        BigRational gap(BigInt(nz * c.k), BigInt(nx));
        gap.canonicalize();
        return sin_sign(PiRational(arg)) * sin_sign(PiRational(gap));
    }
    BigRational arg = BigRational(BigInt(nz * c.j), BigInt(nx)) + b;
    arg.canonicalize();
    BigRational gap(BigInt(nz * c.k), BigInt(ny));
    gap.canonicalize();
    return sin_sign(PiRational(arg)) * sin_sign(PiRational(gap));
}

// 2 sin(mean) sin(half gap) form of z(t1) - z(t2).
long double float_height(int nx, int ny, int nz, long double phi_y, long double phi_z, const CrossingRecord& c) {
    if (c.kind == CrossingKind::TypeI) {
        long double mean = nz * (c.j * kPi - phi_y) / ny + phi_z;
        long double gap = nz * c.k * kPi / nx;
        return 2.0L * std::sin(mean) * std::sin(gap);
    }
    long double mean = nz * c.j * kPi / nx + phi_z;
    long double gap = nz * c.k * kPi / ny;
    return 2.0L * std::sin(mean) * std::sin(gap);
}

}  // namespace

std::vector<CrossingRecord> resolve_heights(const LissajousSpec& spec, std::vector<CrossingRecord> crossings,
                                            long double tolerance) {
    if (spec.is_exact()) {
        const BigRational& a = std::get<PiRational>(spec.phi_y).coeff();
        const BigRational& b = std::get<PiRational>(spec.phi_z).coeff();
        for (auto& c : crossings) {
            int s = exact_height_sign(spec.n_x, spec.n_y, spec.n_z, a, b, c);
            if (s == 0) throw SingularCrossing(crossing_label(c));
            set_resolution(c, s);
        }
        return crossings;
    }
    long double py = phase_radians(spec.phi_y);
    long double pz = phase_radians(spec.phi_z);
    for (auto& c : crossings) {
        long double d = float_height(spec.n_x, spec.n_y, spec.n_z, py, pz, c);
        if (!(std::fabs(d) >= tolerance)) throw SingularCrossing(crossing_label(c) + " |dz| below tolerance");
        set_resolution(c, d > 0 ? 1 : -1);
    }
    return crossings;
}

long double height_difference(const LissajousSpec& spec, const CrossingRecord& c) {
    long double pz = phase_radians(spec.phi_z);
    return std::cos(spec.n_z * c.t1.radians + pz) - std::cos(spec.n_z * c.t2.radians + pz);
}

PlanarDiagram extract_diagram(const LissajousSpec& spec, long double tolerance) {
    auto crossings = resolve_heights(spec, enumerate_crossings(spec), tolerance);
    return build_diagram(spec.n_x, spec.n_y, std::move(crossings));
}

LissajousSpec reduce_to_fundamental(const LissajousSpec& spec) {
    if (!spec.is_exact()) throw InvalidArgument("reduce_to_fundamental needs exact phases");
    const BigRational& a = std::get<PiRational>(spec.phi_y).coeff();
    const BigRational& b = std::get<PiRational>(spec.phi_z).coeff();
    const BigRational width(BigInt(1), BigInt(spec.n_x));
    for (int k = 0; k < spec.n_x; ++k) {
        BigRational shift_y(BigInt(k * spec.n_y), BigInt(spec.n_x));
        shift_y.canonicalize();
        BigRational a2 = frac_of(a + shift_y);
        if (a2 < width) {
            BigRational shift_z(BigInt(k * spec.n_z), BigInt(spec.n_x));
            shift_z.canonicalize();
            LissajousSpec out = spec;
            out.phi_y = PiRational(a2);
            out.phi_z = PiRational(frac_of(b + shift_z));
            return out;
        }
    }
    throw InvalidArgument("no fundamental representative found");
}

std::string to_string(const Wall& w) {
    const char* t = w.type == WallType::Slanted ? "slanted" : w.type == WallType::Horizontal ? "horizontal" : "vertical";
    return std::string(t) + ":" + std::to_string(w.l);
}

namespace {

// Line arrangement of the fundamental domain in units of pi:
// a = phi_y/pi in [0, 1/n_x], b = phi_z/pi in [0, 1].
struct Arrangement {
    struct Cell {
        std::size_t strip;
        Wall lower, upper;
        BigRational b_mid;
    };

    int nx, ny, nz;
    std::vector<BigRational> breaks;  // strip boundaries in a
    std::vector<std::vector<Cell>> strips;
    std::vector<std::size_t> face_of;  // flat cell index -> face id
    std::vector<std::pair<std::size_t, std::size_t>> flat;  // flat index -> (strip, cell)
    std::size_t face_count = 0;

    BigRational value(const Wall& w, const BigRational& a) const {
        if (w.type == WallType::Slanted) return (BigRational(nz) * a + w.l) / ny;
        return BigRational(BigInt(w.l), BigInt(nx));
    }
    BigRational a_mid(std::size_t strip) const { return (breaks[strip] + breaks[strip + 1]) / 2; }
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

Arrangement build_arrangement(int nx, int ny, int nz) {
    check_frequencies(nx, ny);
    if (std::gcd(nx, nz) != 1 || std::gcd(ny, nz) != 1) throw InvalidArgument("frequencies must be pairwise coprime");
    Arrangement ar{nx, ny, nz, {}, {}, {}, {}, 0};
    const BigRational width(BigInt(1), BigInt(nx));

    std::vector<Wall> slanted;
    BigInt l_min = floor_of(BigRational(BigInt(-nz), BigInt(nx))) + 1;
    for (long l = l_min.get_si(); l <= ny - 1; ++l) slanted.push_back({WallType::Slanted, static_cast<int>(l)});
    std::vector<Wall> horizontal;
    for (int m = 0; m <= nx; ++m) horizontal.push_back({WallType::Horizontal, m});

    std::set<BigRational> breaks{BigRational(0), width};
    for (const Wall& s : slanted) {
        for (const Wall& h : horizontal) {
            // (nz a + l)/ny = m/nx
            BigRational a = (BigRational(BigInt(ny * h.l), BigInt(nx)) - s.l) / nz;
            if (a > 0 && a < width) breaks.insert(a);
        }
    }
    ar.breaks.assign(breaks.begin(), breaks.end());

    for (std::size_t s = 0; s + 1 < ar.breaks.size(); ++s) {
        BigRational am = ar.a_mid(s);
        std::vector<std::pair<BigRational, Wall>> walls;
        for (const Wall& h : horizontal) walls.emplace_back(ar.value(h, am), h);
        for (const Wall& w : slanted) {
            BigRational v = ar.value(w, am);
            if (v > 0 && v < 1) walls.emplace_back(v, w);
        }
        std::sort(walls.begin(), walls.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<Arrangement::Cell> cells;
        for (std::size_t i = 0; i + 1 < walls.size(); ++i)
            cells.push_back({s, walls[i].second, walls[i + 1].second, (walls[i].first + walls[i + 1].first) / 2});
        ar.strips.push_back(std::move(cells));
    }

    std::vector<std::size_t> offset;
    for (std::size_t s = 0; s < ar.strips.size(); ++s) {
        offset.push_back(ar.flat.size());
        for (std::size_t i = 0; i < ar.strips[s].size(); ++i) ar.flat.emplace_back(s, i);
    }
    std::vector<std::size_t> parent(ar.flat.size());
    std::iota(parent.begin(), parent.end(), 0);

    // Merge cells of neighbouring strips that share a boundary segment.
    for (std::size_t s = 0; s + 1 < ar.strips.size(); ++s) {
        const BigRational& c = ar.breaks[s + 1];
        const auto& left = ar.strips[s];
        const auto& right = ar.strips[s + 1];
        std::size_t i = 0, j = 0;
        while (i < left.size() && j < right.size()) {
            BigRational llo = ar.value(left[i].lower, c), lhi = ar.value(left[i].upper, c);
            BigRational rlo = ar.value(right[j].lower, c), rhi = ar.value(right[j].upper, c);
            if (std::max(llo, rlo) < std::min(lhi, rhi)) {
                std::size_t x = find_root(parent, offset[s] + i), y = find_root(parent, offset[s + 1] + j);
                if (x != y) parent[std::max(x, y)] = std::min(x, y);
            }
            if (lhi < rhi) ++i;
            else ++j;
        }
    }

    std::map<std::size_t, std::size_t> face_ids;
    ar.face_of.resize(ar.flat.size());
    for (std::size_t f = 0; f < ar.flat.size(); ++f) {
        std::size_t root = find_root(parent, f);
        auto it = face_ids.try_emplace(root, face_ids.size()).first;
        ar.face_of[f] = it->second;
    }
    ar.face_count = face_ids.size();
    return ar;
}

}  // namespace

std::vector<PhaseRegion> decompose_phase_torus(int n_x, int n_y, int n_z) {
    Arrangement ar = build_arrangement(n_x, n_y, n_z);
    std::vector<PhaseRegion> out(ar.face_count);
    std::vector<bool> seen(ar.face_count, false);
    std::vector<std::set<Wall>> walls(ar.face_count);
    const std::size_t last_strip = ar.strips.size() - 1;
    for (std::size_t f = 0; f < ar.flat.size(); ++f) {
        auto [s, i] = ar.flat[f];
        const auto& cell = ar.strips[s][i];
        std::size_t face = ar.face_of[f];
        if (!seen[face]) {
            seen[face] = true;
            out[face].phi_y = PiRational(ar.a_mid(s));
            out[face].phi_z = PiRational(cell.b_mid);
        }
        walls[face].insert(cell.lower);
        walls[face].insert(cell.upper);
        if (s == 0) walls[face].insert({WallType::Vertical, 0});
        if (s == last_strip) walls[face].insert({WallType::Vertical, 1});
    }
    for (std::size_t f = 0; f < out.size(); ++f) out[f].walls.assign(walls[f].begin(), walls[f].end());
    return out;
}

std::vector<WallCrossing> interior_wall_crossings(int n_x, int n_y, int n_z) {
    Arrangement ar = build_arrangement(n_x, n_y, n_z);
    std::vector<WallCrossing> out;
    for (std::size_t s = 0; s < ar.strips.size(); ++s) {
        const auto& cells = ar.strips[s];
        for (std::size_t i = 0; i + 1 < cells.size(); ++i)
            out.push_back({cells[i].upper, PiRational(ar.a_mid(s)), PiRational(cells[i].b_mid),
                           PiRational(cells[i + 1].b_mid)});
    }
    return out;
}

std::set<CrossingKey> predict_flips(int n_x, int n_y, int n_z, const Wall& wall) {
    if (wall.type == WallType::Vertical) throw VerticalWall("l = " + std::to_string(wall.l));
    // Any phi_y strictly inside the domain gives the same crossing indices.
    auto crossings = enumerate_projection(n_x, n_y, PiRational(BigRational(BigInt(1), BigInt(2 * n_x))));
    std::set<CrossingKey> out;
    for (const auto& c : crossings) {
        if (wall.type == WallType::Slanted && c.kind == CrossingKind::TypeI &&
            (static_cast<long>(c.j) * n_z + wall.l) % n_y == 0)
            out.insert(c.key());
        if (wall.type == WallType::Horizontal && c.kind == CrossingKind::TypeII &&
            (static_cast<long>(c.j) * n_z + wall.l) % n_x == 0)
            out.insert(c.key());
    }
    return out;
}

KnotClass classify_diagram(const PlanarDiagram& diagram) {
    KnotClass k;
    k.diagram_crossings = diagram.crossing_count();
    DTCode code = dt_code(diagram);
    k.dt = code.to_string();
    if (diagram.n_x == 2) {
        TwoBridgeFraction f = fraction_from_diagram(four_plat_signs(diagram));
        k.identity = f.to_string();
        k.fraction = f;
    } else {
        k.identity = "dt:" + code.hash_hex();
    }
    return k;
}

KnotClass classify(const LissajousSpec& spec, long double tolerance) {
    return classify_diagram(extract_diagram(spec, tolerance));
}

std::vector<ClassifiedRegion> classify_regions(int n_x, int n_y, int n_z, int workers) {
    auto regions = decompose_phase_torus(n_x, n_y, n_z);
    std::vector<ClassifiedRegion> out(regions.size());
    parallel_for(regions.size(), workers, [&](std::size_t i) {
        LissajousSpec spec = LissajousSpec::make(n_x, n_y, n_z, regions[i].phi_y, regions[i].phi_z);
        out[i] = {regions[i], classify(spec)};
    });
    return out;
}

std::set<std::string> enumerate_L(int n_x, int n_y, int n_z, int workers) {
    std::set<std::string> out;
    for (const auto& r : classify_regions(n_x, n_y, n_z, workers)) out.insert(r.knot.identity);
    return out;
}

std::vector<int> family_window(int n_x, int n_y, bool wide_window) {
    check_frequencies(n_x, n_y);
    int lo, hi;
    if (wide_window) {
        if (n_x != 2) throw InvalidArgument("the wide window is defined for n_x = 2");
        lo = 3 * n_y + 2;
        hi = 7 * n_y;
    } else {
        lo = 2 * n_x * n_y - n_y;
        hi = lo + 2 * n_x * n_y - 1;
    }
    std::vector<int> out;
    for (int nz = lo; nz <= hi; ++nz)
        if (std::gcd(nz, n_x) == 1 && std::gcd(nz, n_y) == 1) out.push_back(nz);
    return out;
}

std::set<std::string> enumerate_L_family(int n_x, int n_y, int workers, bool wide_window) {
    std::set<std::string> out;
    for (int nz : family_window(n_x, n_y, wide_window)) out.merge(enumerate_L(n_x, n_y, nz, workers));
    out.erase("1/1");  // family counts leave out the unknot
    return out;
}

std::string region_json_line(int n_x, int n_y, int n_z, const ClassifiedRegion& r) {
    nlohmann::ordered_json j;
    j["frequencies"] = {n_x, n_y, n_z};
    j["sample_point"] = {r.region.phi_y.to_string(), r.region.phi_z.to_string()};
    j["knot_id"] = r.knot.identity;
    j["crossing_count"] = r.knot.diagram_crossings;
    if (r.knot.fraction && !r.knot.fraction->is_unknot()) j["crossing_number"] = crossing_number(*r.knot.fraction);
    return j.dump() + "\n";
}

namespace {

std::string color_for(const std::string& identity) {
    if (identity == "1/1") return "#ffffff";
    std::uint32_t h = 2166136261u;
    for (unsigned char ch : identity) {
        h ^= ch;
        h *= 16777619u;
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", 96 + (h & 0x7f), 96 + ((h >> 8) & 0x7f), 96 + ((h >> 16) & 0x7f));
    return buf;
}

}  // namespace

std::string render_phase_torus_svg(int n_x, int n_y, int n_z, int workers) {
    Arrangement ar = build_arrangement(n_x, n_y, n_z);
    auto classified = classify_regions(n_x, n_y, n_z, workers);
    const double size = 600.0;
    const double sx = size * n_x;  // pixels per unit a
    const double sy = size;        // pixels per unit b
    auto px = [&](const BigRational& a) { return a.get_d() * sx; };
    auto py = [&](const BigRational& b) { return (1.0 - b.get_d()) * sy; };

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
    for (std::size_t f = 0; f < ar.flat.size(); ++f) {
        auto [s, i] = ar.flat[f];
        const auto& cell = ar.strips[s][i];
        const BigRational &a0 = ar.breaks[s], &a1 = ar.breaks[s + 1];
        const std::string& id = classified[ar.face_of[f]].knot.identity;
        os << "<polygon fill=\"" << color_for(id) << "\" stroke=\"none\" points=\"" << px(a0) << ','
           << py(ar.value(cell.lower, a0)) << ' ' << px(a1) << ',' << py(ar.value(cell.lower, a1)) << ' ' << px(a1)
           << ',' << py(ar.value(cell.upper, a1)) << ' ' << px(a0) << ',' << py(ar.value(cell.upper, a0)) << "\"/>\n";
    }
    std::set<Wall> drawn;
    for (const auto& strip : ar.strips)
        for (const auto& cell : strip) drawn.insert(cell.lower), drawn.insert(cell.upper);
    const BigRational a_end = ar.breaks.back();
    for (const Wall& w : drawn) {
        os << "<line stroke=\"black\" stroke-width=\"1\" x1=\"" << px(0) << "\" y1=\"" << py(ar.value(w, 0))
           << "\" x2=\"" << px(a_end) << "\" y2=\"" << py(ar.value(w, a_end)) << "\"/>\n";
    }
    for (const auto& r : classified) {
        if (r.knot.is_unknot()) continue;
        os << "<text font-size=\"10\" text-anchor=\"middle\" x=\"" << px(r.region.phi_y.coeff()) << "\" y=\""
           << py(r.region.phi_z.coeff()) << "\">" << r.knot.identity << "</text>\n";
    }
    os << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n</svg>\n";
    return os.str();
}

}  // namespace knotforge
