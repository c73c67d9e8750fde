#include "knotforge/catalog.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace knotforge {

using nlohmann::ordered_json;

std::string to_string(Family f) { return f == Family::Lissajous ? "lissajous" : "fourier112"; }

Family parse_family(const std::string& text) {
    if (text == "lissajous") return Family::Lissajous;
    if (text == "fourier112") return Family::Fourier112;
    throw InvalidArgument("unknown family: " + text);
}

std::string format_real(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.21Lg", v);
    return buf;
}

long double parse_real(const std::string& text) {
    char* end = nullptr;
    long double v = std::strtold(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) throw InvalidArgument("not a number: " + text);
    return v;
}

namespace {

ordered_json phase_json(const Phase& p) {
    if (const auto* exact = std::get_if<PiRational>(&p)) return exact->to_string();
    ordered_json j;
    j["radians"] = format_real(std::get<RealPhase>(p).value);
    return j;
}

}  // namespace

ordered_json KnotRecord::to_json() const {
    ordered_json j;
    j["identity"] = identity;
    j["family"] = to_string(family);
    j["frequencies"] = frequencies;
    j["crossing_number"] = crossing_number ? ordered_json(*crossing_number) : ordered_json(nullptr);
    j["parameters"] = parameters;
    j["first_seen"] = first_seen;
    return j;
}

KnotRecord KnotRecord::from_json(const ordered_json& j) {
    try {
        KnotRecord r;
        r.identity = j.at("identity").get<std::string>();
        r.family = parse_family(j.at("family").get<std::string>());
        r.frequencies = j.at("frequencies").get<std::vector<int>>();
        if (!j.at("crossing_number").is_null()) r.crossing_number = j.at("crossing_number").get<int>();
        r.parameters = j.at("parameters");
        r.first_seen = j.at("first_seen").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("bad catalog record: ") + e.what());
    }
}

bool KnotRecord::operator==(const KnotRecord& other) const { return to_json() == other.to_json(); }

KnotRecord lissajous_record(const LissajousSpec& spec, const KnotClass& knot, const std::string& provenance) {
    KnotRecord r;
    r.identity = knot.identity;
    r.family = Family::Lissajous;
    r.frequencies = {spec.n_x, spec.n_y, spec.n_z};
    r.parameters["n_x"] = spec.n_x;
    r.parameters["n_y"] = spec.n_y;
    r.parameters["n_z"] = spec.n_z;
    r.parameters["phi_y"] = phase_json(spec.phi_y);
    r.parameters["phi_z"] = phase_json(spec.phi_z);
    if (knot.fraction) r.crossing_number = crossing_number(*knot.fraction);
    r.first_seen = provenance;
    return r;
}

KnotRecord fourier_record(const FourierSpec& spec, const std::string& identity, std::optional<int> cr,
                          const std::string& provenance) {
    const FourierFrame& f = spec.frame;
    KnotRecord r;
    r.identity = identity;
    r.family = Family::Fourier112;
    r.frequencies = {f.n_x, f.n_y, f.n_z1, f.n_z2};
    r.parameters["n_x"] = f.n_x;
    r.parameters["n_y"] = f.n_y;
    r.parameters["n_z1"] = f.n_z1;
    r.parameters["n_z2"] = f.n_z2;
    r.parameters["phi_y"] = format_real(f.phi_y);
    r.parameters["phi_z1"] = format_real(spec.phi_z1);
    r.parameters["phi_z2"] = format_real(spec.phi_z2);
    r.parameters["amp"] = format_real(f.amp);
    r.crossing_number = cr;
    r.first_seen = provenance;
    return r;
}

FourierSpec fourier_spec_of(const KnotRecord& r) {
    if (r.family != Family::Fourier112) throw InvalidArgument("not a Fourier-(1,1,2) record");
    const auto& p = r.parameters;
    auto real = [&](const char* key) { return parse_real(p.at(key).get<std::string>()); };
    return FourierSpec::make(p.at("n_x").get<int>(), p.at("n_y").get<int>(), real("phi_y"), p.at("n_z1").get<int>(),
                             real("phi_z1"), p.at("n_z2").get<int>(), real("phi_z2"), real("amp"));
}

bool preferred(const KnotRecord& candidate, const KnotRecord& stored) {
    if (candidate.frequencies != stored.frequencies) return candidate.frequencies < stored.frequencies;
    return candidate.parameters.dump() < stored.parameters.dump();
}

KnotRecord Catalog::upsert(const KnotRecord& record) {
    std::unique_lock lock(mutex_);
    auto key = std::make_pair(record.family, record.identity);
    auto it = records_.find(key);
    if (it == records_.end()) return records_.emplace(key, record).first->second;
    if (preferred(record, it->second)) it->second = record;
    return it->second;
}

std::optional<KnotRecord> Catalog::find(Family family, const std::string& identity) const {
    std::shared_lock lock(mutex_);
    auto it = records_.find({family, identity});
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

std::vector<KnotRecord> Catalog::records() const {
    std::shared_lock lock(mutex_);
    std::vector<KnotRecord> out;
    for (const auto& [key, r] : records_) out.push_back(r);
    return out;
}

std::size_t Catalog::size() const {
    std::shared_lock lock(mutex_);
    return records_.size();
}

std::size_t Catalog::count_knots(Family family) const {
    std::shared_lock lock(mutex_);
    std::size_t n = 0;
    for (const auto& [key, r] : records_)
        if (key.first == family && r.identity != "1/1") ++n;
    return n;
}

std::string Catalog::to_jsonl() const {
    std::string out;
    for (const auto& r : records()) out += r.to_json().dump() + "\n";
    return out;
}

void Catalog::save(const std::filesystem::path& path) const {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw InvalidArgument("cannot write " + path.string());
    os << to_jsonl();
}

Catalog Catalog::from_jsonl(const std::string& text) {
    Catalog c;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidArgument(std::string("bad catalog line: ") + e.what());
        }
        c.upsert(KnotRecord::from_json(j));
    }
    return c;
}

Catalog Catalog::load(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return Catalog();
    std::ostringstream buf;
    buf << is.rdbuf();
    return from_jsonl(buf.str());
}

void Catalog::append(const std::filesystem::path& path, const KnotRecord& record) {
    std::ofstream os(path, std::ios::binary | std::ios::app);
    if (!os) throw InvalidArgument("cannot append to " + path.string());
    os << record.to_json().dump() << '\n';
}

void Catalog::compact(const std::filesystem::path& path) {
    Catalog c = load(path);
    auto tmp = path;
    tmp += ".tmp";
    c.save(tmp);
    std::filesystem::rename(tmp, path);
}

CatalogWriter::CatalogWriter(Catalog& catalog, std::optional<std::filesystem::path> log)
    : catalog_(catalog), log_(std::move(log)) {
    thread_ = std::thread([this] {
        while (auto r = channel_.receive()) {
            KnotRecord before = catalog_.find(r->family, r->identity).value_or(KnotRecord{});
            KnotRecord after = catalog_.upsert(*r);
            if (log_ && !(before == after)) Catalog::append(*log_, after);
        }
    });
}

CatalogWriter::~CatalogWriter() {
    if (thread_.joinable()) finish();
}

void CatalogWriter::finish() {
    channel_.close();
    if (thread_.joinable()) thread_.join();
}

void catalog_lissajous_family(Catalog& catalog, int n_x, int n_y, int workers, bool wide_window) {
    CatalogWriter writer(catalog);
    for (int nz : family_window(n_x, n_y, wide_window)) {
        std::string provenance = "faces of (" + std::to_string(n_x) + "," + std::to_string(n_y) + "," +
                                 std::to_string(nz) + ")";
        for (const auto& r : classify_regions(n_x, n_y, nz, workers)) {
            LissajousSpec spec = LissajousSpec::make(n_x, n_y, nz, r.region.phi_y, r.region.phi_z);
            writer.send(lissajous_record(spec, r.knot, provenance));
        }
    }
    writer.finish();
}

std::map<int, std::size_t> tabulate_L2(int n_y_max, int workers, bool wide_window) {
    std::map<int, std::size_t> out;
    for (int ny = 3; ny <= n_y_max; ny += 2) {
        Catalog c;
        catalog_lissajous_family(c, 2, ny, workers, wide_window);
        out[ny] = c.count_knots(Family::Lissajous);
    }
    return out;
}

CrossingTable tabulate_by_crossing(const std::vector<int>& n_y_list, int workers, bool wide_window) {
    CrossingTable out;
    for (int ny : n_y_list) {
        Catalog c;
        catalog_lissajous_family(c, 2, ny, workers, wide_window);
        auto& by_cr = out[ny];
        for (const auto& r : c.records()) {
            if (r.identity == "1/1") continue;
            TwoBridgeFraction f = parse_fraction(r.identity);
            by_cr[crossing_number(f)].insert(f);
        }
    }
    return out;
}

std::string format_L2_counts(const std::map<int, std::size_t>& counts) {
    std::string out = "n_y,count\n";
    for (const auto& [ny, n] : counts) out += std::to_string(ny) + "," + std::to_string(n) + "\n";
    return out;
}

std::string format_crossing_table(const CrossingTable& table) {
    std::string out = "n_y,crossing,fractions\n";
    for (const auto& [ny, by_cr] : table) {
        for (const auto& [cr, set] : by_cr) {
            out += std::to_string(ny) + "," + std::to_string(cr) + ",";
            bool first = true;
            for (const auto& f : set) {
                out += (first ? "" : " ") + f.to_string();
                first = false;
            }
            out += "\n";
        }
    }
    return out;
}

std::vector<TwoBridgeCountRow> tabulate_two_bridge_counts(int cr_max, int workers) {
    std::vector<TwoBridgeCountRow> rows;
    for (const auto& [cr, set] : enumerate_two_bridge(cr_max, workers)) {
        TwoBridgeCountRow row{cr, set.size(), 0};
        for (const auto& f : set)
            if (is_one_mod2(alexander_of(f))) ++row.delta_one_mod2;
        rows.push_back(row);
    }
    return rows;
}

std::string format_two_bridge_counts(const std::vector<TwoBridgeCountRow>& rows) {
    std::string out = "crossing,two_bridge,delta_one_mod2\n";
    for (const auto& r : rows)
        out += std::to_string(r.crossing) + "," + std::to_string(r.two_bridge) + "," +
               std::to_string(r.delta_one_mod2) + "\n";
    return out;
}

}  // namespace knotforge
