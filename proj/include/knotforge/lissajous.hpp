#pragma once

#include "knotforge/diagram.hpp"
#include "knotforge/exactmath.hpp"
#include "knotforge/twobridge.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace knotforge {

inline constexpr long double kDefaultTolerance = 1e-9L;

// Default |Delta| tolerance, overridable through KNOTFORGE_TOLERANCE.
long double default_tolerance();

using Phase = std::variant<PiRational, RealPhase>;

long double phase_radians(const Phase& p);
std::string phase_to_string(const Phase& p);  // "p/q" of pi, or decimal radians

// x = cos(n_x t), y = cos(n_y t + phi_y), z = cos(n_z t + phi_z).
struct LissajousSpec {
    int n_x = 2;
    int n_y = 3;
    int n_z = 5;
    Phase phi_y = PiRational();
    Phase phi_z = PiRational();

    // Validates the frequency constraints.
    static LissajousSpec make(int n_x, int n_y, int n_z, Phase phi_y, Phase phi_z);

    bool is_exact() const {
        return std::holds_alternative<PiRational>(phi_y) && std::holds_alternative<PiRational>(phi_z);
    }
};

// Crossings of the projection of (cos(n_x t), cos(n_y t + phi_y)), unresolved.
std::vector<CrossingRecord> enumerate_projection(int n_x, int n_y, const Phase& phi_y);

inline std::vector<CrossingRecord> enumerate_crossings(const LissajousSpec& s) {
    return enumerate_projection(s.n_x, s.n_y, s.phi_y);
}

// Fills over_first and sign from a height difference z(t1) - z(t2).
void set_resolution(CrossingRecord& c, int height_sign);

std::vector<CrossingRecord> resolve_heights(const LissajousSpec& spec, std::vector<CrossingRecord> crossings,
                                            long double tolerance = kDefaultTolerance);

// z(t1) - z(t2) in floating point, straight from the curve.
long double height_difference(const LissajousSpec& spec, const CrossingRecord& c);

PlanarDiagram extract_diagram(const LissajousSpec& spec, long double tolerance = kDefaultTolerance);

LissajousSpec reduce_to_fundamental(const LissajousSpec& spec);

enum class WallType { Slanted, Horizontal, Vertical };

// Slanted: phi_z = (n_z/n_y) phi_y + l pi/n_y; horizontal: phi_z = l pi/n_x;
// vertical: phi_y = l pi/n_x.
struct Wall {
    WallType type = WallType::Slanted;
    int l = 0;
    auto operator<=>(const Wall&) const = default;
};

std::string to_string(const Wall& w);

struct PhaseRegion {
    PiRational phi_y;
    PiRational phi_z;
    std::vector<Wall> walls;
};

std::vector<PhaseRegion> decompose_phase_torus(int n_x, int n_y, int n_z);

// Two sample points on either side of one interior wall segment.
struct WallCrossing {
    Wall wall;
    PiRational phi_y;
    PiRational below_phi_z;
    PiRational above_phi_z;
};

std::vector<WallCrossing> interior_wall_crossings(int n_x, int n_y, int n_z);

std::set<CrossingKey> predict_flips(int n_x, int n_y, int n_z, const Wall& wall);

// Result of classifying one knot diagram.
struct KnotClass {
    std::string identity;  // "p/q", "1/1" for the unknot, or "dt:<hash>"
    std::optional<TwoBridgeFraction> fraction;
    std::string dt;
    int diagram_crossings = 0;

    bool is_unknot() const { return identity == "1/1"; }
};

// n_x = 2 diagrams are classified by their fraction, others by DT code.
KnotClass classify_diagram(const PlanarDiagram& diagram);
KnotClass classify(const LissajousSpec& spec, long double tolerance = kDefaultTolerance);

struct ClassifiedRegion {
    PhaseRegion region;
    KnotClass knot;
};

std::vector<ClassifiedRegion> classify_regions(int n_x, int n_y, int n_z, int workers = 1);

std::set<std::string> enumerate_L(int n_x, int n_y, int n_z, int workers = 1);

// n_z values scanned by enumerate_L_family.
std::vector<int> family_window(int n_x, int n_y, bool wide_window = false);

// Knot types over the window, unknot excluded.
std::set<std::string> enumerate_L_family(int n_x, int n_y, int workers = 1, bool wide_window = false);

// JSON line describing one classified region.
std::string region_json_line(int n_x, int n_y, int n_z, const ClassifiedRegion& r);

// Fundamental domain as SVG: faces filled by knot type, walls stroked.
std::string render_phase_torus_svg(int n_x, int n_y, int n_z, int workers = 1);

}  // namespace knotforge
