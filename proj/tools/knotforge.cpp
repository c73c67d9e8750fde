// Command-line front end for the knotforge libraries.

#include "knotforge/catalog.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/fourier.hpp"
#include "knotforge/lissajous.hpp"
#include "knotforge/twobridge.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

using namespace knotforge;
using nlohmann::ordered_json;

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw InvalidArgument("cannot write " + path);
    os << text;
}

// Strings are fractions of pi ("1/4"), numbers are radians.
Phase phase_from_json(const ordered_json& j) {
    if (j.is_string()) return PiRational(parse_rational(j.get<std::string>()));
    if (j.is_number()) return RealPhase{j.get<long double>()};
    throw InvalidArgument("phase must be a string or a number");
}

long double radians_from_json(const ordered_json& j) { return phase_radians(phase_from_json(j)); }

ordered_json read_spec_json(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream is(arg.substr(1));
        if (!is) throw InvalidArgument("cannot read " + arg.substr(1));
        std::ostringstream buf;
        buf << is.rdbuf();
        text = buf.str();
    }
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("bad spec json: ") + e.what());
    }
}

bool is_fourier(const ordered_json& j) {
    return j.value("family", std::string(j.contains("n_z1") ? "fourier112" : "lissajous")) == "fourier112";
}

LissajousSpec lissajous_from_json(const ordered_json& j) {
    return LissajousSpec::make(j.value("n_x", 2), j.at("n_y").get<int>(), j.at("n_z").get<int>(),
                               phase_from_json(j.at("phi_y")), phase_from_json(j.at("phi_z")));
}

FourierSpec fourier_from_json(const ordered_json& j) {
    return FourierSpec::make(j.value("n_x", 2), j.at("n_y").get<int>(), radians_from_json(j.at("phi_y")),
                             j.at("n_z1").get<int>(), radians_from_json(j.at("phi_z1")), j.at("n_z2").get<int>(),
                             radians_from_json(j.at("phi_z2")), j.contains("amp") ? j.at("amp").get<long double>() : 1.0L);
}

PlanarDiagram diagram_from_json(const ordered_json& j, long double tol) {
    return is_fourier(j) ? fourier_diagram(fourier_from_json(j), tol) : extract_diagram(lissajous_from_json(j), tol);
}

ordered_json knot_json(const KnotClass& k) {
    ordered_json out;
    out["identity"] = k.identity;
    out["crossing_number"] = k.fraction ? ordered_json(crossing_number(*k.fraction)) : ordered_json(nullptr);
    out["diagram_crossings"] = k.diagram_crossings;
    out["dt"] = k.dt;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lissajous and Fourier-(1,1,2) knot tabulation"};
    app.require_subcommand(1);

    int workers = 1;

    // enumerate-lissajous
    auto* en = app.add_subcommand("enumerate-lissajous", "classify every face of the phase torus");
    int en_nx = 2, en_ny = 3, en_nz = 0;
    bool en_family = false, en_wide = false;
    std::string en_catalog;
    en->add_option("--nx", en_nx)->default_val(2);
    en->add_option("--ny", en_ny)->required();
    auto* nz_opt = en->add_option("--nz", en_nz);
    auto* fam_flag = en->add_flag("--family", en_family, "scan the n_z window and print one record per knot");
    nz_opt->excludes(fam_flag);
    en->add_flag("--wide-window", en_wide, "n_z in [3 n_y + 2, 7 n_y] (n_x = 2)");
    en->add_option("--catalog", en_catalog, "JSON-lines catalog to update");
    en->add_option("--workers", workers)->check(CLI::PositiveNumber);

    // sample-fourier
    auto* sf = app.add_subcommand("sample-fourier", "random Fourier-(1,1,2) sampling in batches");
    int sf_ny = 3, sf_batches = 10, sf_empty = 3;
    std::uint64_t sf_seed = 1;
    std::size_t sf_batch_size = 10000;
    SamplingOptions sf_opts;
    std::string sf_catalog;
    sf->add_option("--ny", sf_ny)->required();
    sf->add_option("--seed", sf_seed)->default_val(1);
    sf->add_option("--batches", sf_batches, "maximum number of batches")->default_val(10);
    sf->add_option("--batch-size", sf_batch_size)->default_val(10000);
    sf->add_option("--zmax", sf_opts.zmax)->default_val(301);
    sf->add_option("--amp-max", sf_opts.amp_max)->default_val(2.0);
    sf->add_option("--max-crossing", sf_opts.max_crossing)->default_val(16);
    sf->add_option("--empty-batches", sf_empty, "stop after this many batches without a new knot")->default_val(3);
    sf->add_option("--catalog", sf_catalog, "JSON-lines catalog to update");
    sf->add_option("--workers", workers)->check(CLI::PositiveNumber);

    // classify
    auto* cl = app.add_subcommand("classify", "classify one spec");
    std::string cl_json;
    cl->add_option("--spec-json", cl_json, "JSON object or @file; strings are fractions of pi, numbers radians")
        ->required();

    // tabulate
    auto* tb = app.add_subcommand("tabulate", "reproduce a published table");
    int tb_table = 1, tb_ny_max = 13, tb_cr_max = 14;
    bool tb_wide = false;
    tb->add_option("--paper-table", tb_table)->required()->check(CLI::IsMember({1, 3, 6}));
    tb->add_option("--ny-max", tb_ny_max, "largest n_y for the L(2, n_y) tables")->default_val(13);
    tb->add_option("--cr-max", tb_cr_max, "largest crossing number for the 2-bridge counts")->default_val(14);
    tb->add_flag("--wide-window", tb_wide);
    tb->add_option("--workers", workers)->check(CLI::PositiveNumber);

    // render-torus
    auto* rt = app.add_subcommand("render-torus", "SVG of the fundamental domain");
    int rt_nx = 2, rt_ny = 3, rt_nz = 5;
    std::string rt_out;
    rt->add_option("--nx", rt_nx)->default_val(2);
    rt->add_option("--ny", rt_ny)->required();
    rt->add_option("--nz", rt_nz)->required();
    rt->add_option("--out", rt_out)->required();
    rt->add_option("--workers", workers)->check(CLI::PositiveNumber);

    // render-fourier
    auto* rf = app.add_subcommand("render-fourier", "singular curves of a Fourier-(1,1,2) frame, as PGM or SVG");
    FourierFrame rf_frame;
    double rf_phi_y = std::numbers::pi / 4;
    int rf_res = 250;
    std::string rf_out;
    rf->add_option("--nx", rf_frame.n_x)->default_val(2);
    rf->add_option("--ny", rf_frame.n_y)->required();
    rf->add_option("--nz1", rf_frame.n_z1)->required();
    rf->add_option("--nz2", rf_frame.n_z2)->required();
    rf->add_option("--phi-y", rf_phi_y, "radians");
    rf->add_option("--amp", rf_frame.amp)->default_val(1.0);
    rf->add_option("--resolution", rf_res)->default_val(250);
    rf->add_option("--out", rf_out, "*.pgm or *.svg")->required();

    // export-dt
    auto* ed = app.add_subcommand("export-dt", "DT codes, one per line");
    std::string ed_json, ed_out;
    int ed_nx = 2, ed_ny = 0, ed_nz = 0;
    ed->add_option("--spec-json", ed_json, "single spec");
    ed->add_option("--nx", ed_nx)->default_val(2);
    ed->add_option("--ny", ed_ny, "with --nz: every face of the torus");
    ed->add_option("--nz", ed_nz);
    ed->add_option("--out", ed_out)->required();

    CLI11_PARSE(app, argc, argv);

    const long double tol = default_tolerance();
    sf_opts.tolerance = tol;

    try {
        if (*en) {
            if (en_family) {
                Catalog c = en_catalog.empty() ? Catalog() : Catalog::load(en_catalog);
                Catalog fresh;
                catalog_lissajous_family(fresh, en_nx, en_ny, workers, en_wide);
                for (const auto& r : fresh.records()) c.upsert(r);
                std::cout << fresh.to_jsonl();
                std::cerr << "knots (unknot excluded): " << fresh.count_knots(Family::Lissajous) << "\n";
                if (!en_catalog.empty()) c.save(en_catalog);
            } else {
                if (en_nz == 0) throw InvalidArgument("give --nz or --family");
                auto regions = classify_regions(en_nx, en_ny, en_nz, workers);
                for (const auto& r : regions) std::cout << region_json_line(en_nx, en_ny, en_nz, r);
                if (!en_catalog.empty()) {
                    Catalog c = Catalog::load(en_catalog);
                    for (const auto& r : regions)
                        c.upsert(lissajous_record(LissajousSpec::make(en_nx, en_ny, en_nz, r.region.phi_y, r.region.phi_z),
                                                  r.knot, "enumerate-lissajous"));
                    c.save(en_catalog);
                }
            }
        } else if (*sf) {
            Catalog c = sf_catalog.empty() ? Catalog() : Catalog::load(sf_catalog);
            sf_opts.workers = workers;
            int empty_run = 0;
            for (int b = 0; b < sf_batches && empty_run < sf_empty; ++b) {
                sf_opts.batch_index = static_cast<std::uint64_t>(b);
                BatchResult res = random_sample_fourier(sf_ny, sf_seed, sf_batch_size, sf_opts);
                std::size_t fresh = 0;
                std::string provenance = "seed=" + std::to_string(sf_seed) + " batch=" + std::to_string(b);
                for (const auto& f : res.finds) {
                    std::optional<int> cr;
                    if (f.identity.rfind("dt:", 0) != 0) cr = f.crossing_number;
                    if (!c.find(Family::Fourier112, f.identity)) ++fresh;
                    c.upsert(fourier_record(f.spec, f.identity, cr, provenance));
                }
                empty_run = fresh == 0 ? empty_run + 1 : 0;
                std::cerr << "batch " << b << ": sampled " << res.sampled << ", near-singular " << res.near_singular
                          << ", new " << fresh << ", total " << c.count_knots(Family::Fourier112) << "\n";
            }
            std::cout << c.to_jsonl();
            if (!sf_catalog.empty()) c.save(sf_catalog);
        } else if (*cl) {
            ordered_json j = read_spec_json(cl_json);
            KnotClass k = is_fourier(j) ? classify_fourier(fourier_from_json(j), tol) : classify(lissajous_from_json(j), tol);
            std::cout << knot_json(k).dump() << "\n";
        } else if (*tb) {
            if (tb_table == 1) {
                std::cout << format_L2_counts(tabulate_L2(tb_ny_max, workers, tb_wide));
            } else if (tb_table == 3) {
                std::vector<int> nys;
                for (int ny = 3; ny <= tb_ny_max; ny += 2) nys.push_back(ny);
                std::cout << format_crossing_table(tabulate_by_crossing(nys, workers, tb_wide));
            } else {
                std::cout << format_two_bridge_counts(tabulate_two_bridge_counts(tb_cr_max, workers));
            }
        } else if (*rt) {
            write_file(rt_out, render_phase_torus_svg(rt_nx, rt_ny, rt_nz, workers));
        } else if (*rf) {
            rf_frame.phi_y = rf_phi_y;
            auto curves = classify_singular_curves(rf_frame);
            bool svg = rf_out.size() >= 4 && rf_out.substr(rf_out.size() - 4) == ".svg";
            write_file(rf_out, svg ? curves_to_svg(curves) : bitmap_to_pgm(rasterize_curves(curves, rf_res)));
            std::cerr << "curves: " << curves.size() << "\n";
        } else if (*ed) {
            std::string text;
            if (!ed_json.empty()) {
                text = dt_code(diagram_from_json(read_spec_json(ed_json), tol)).to_string() + "\n";
            } else {
                if (ed_ny == 0 || ed_nz == 0) throw InvalidArgument("give --spec-json or --ny and --nz");
                for (const auto& r : decompose_phase_torus(ed_nx, ed_ny, ed_nz)) {
                    auto spec = LissajousSpec::make(ed_nx, ed_ny, ed_nz, r.phi_y, r.phi_z);
                    text += dt_code(extract_diagram(spec, tol)).to_string() + "\n";
                }
            }
            write_file(ed_out, text);
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "InvalidArgument: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
