#pragma once

#include "knotforge/errors.hpp"
#include "knotforge/fourier.hpp"
#include "knotforge/lissajous.hpp"
#include "knotforge/twobridge.hpp"

#include <json.hpp>

#include <condition_variable>
#include <deque>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <thread>
#include <vector>

namespace knotforge {

enum class Family { Lissajous, Fourier112 };

std::string to_string(Family f);
Family parse_family(const std::string& text);

struct KnotRecord {
    std::string identity;
    Family family = Family::Lissajous;
    nlohmann::ordered_json parameters;  // full spec snapshot
    std::optional<int> crossing_number;
    std::string first_seen;
    std::vector<int> frequencies;       // (n_x, n_y, n_z) or (n_x, n_y, n_z1, n_z2)

    nlohmann::ordered_json to_json() const;
    static KnotRecord from_json(const nlohmann::ordered_json& j);

    bool operator==(const KnotRecord& other) const;
};

// Phases go through text with enough digits to restore every bit of a long double.
std::string format_real(long double v);
long double parse_real(const std::string& text);

KnotRecord lissajous_record(const LissajousSpec& spec, const KnotClass& knot, const std::string& provenance);
KnotRecord fourier_record(const FourierSpec& spec, const std::string& identity, std::optional<int> crossing_number,
                          const std::string& provenance);

FourierSpec fourier_spec_of(const KnotRecord& r);

// True when `candidate` should replace `stored`: smaller frequency tuple,
// then smaller parameter text so that the winner is independent of arrival order.
bool preferred(const KnotRecord& candidate, const KnotRecord& stored);

class Catalog {
public:
    Catalog() = default;
    Catalog(Catalog&& other) noexcept : records_(std::move(other.records_)) {}

    // Returns the record held after the call.
    KnotRecord upsert(const KnotRecord& record);

    std::optional<KnotRecord> find(Family family, const std::string& identity) const;
    std::vector<KnotRecord> records() const;  // sorted by (family, identity)
    std::size_t size() const;
    std::size_t count_knots(Family family) const;  // unknot excluded

    // One JSON object per line, sorted; the result of compaction.
    std::string to_jsonl() const;
    void save(const std::filesystem::path& path) const;
    static Catalog load(const std::filesystem::path& path);
    static Catalog from_jsonl(const std::string& text);

    // Appends one line; load() replays the log through upsert.
    static void append(const std::filesystem::path& path, const KnotRecord& record);
    static void compact(const std::filesystem::path& path);

private:
    mutable std::shared_mutex mutex_;
    std::map<std::pair<Family, std::string>, KnotRecord> records_;
};

// Closable multi-producer queue.
template <class T>
class Channel {
public:
    void send(T value) {
        {
            std::lock_guard lock(mutex_);
            if (closed_) throw InvalidArgument("send on closed channel");
            queue_.push_back(std::move(value));
        }
        ready_.notify_one();
    }

    std::optional<T> receive() {
        std::unique_lock lock(mutex_);
        ready_.wait(lock, [&] { return closed_ || !queue_.empty(); });
        if (queue_.empty()) return std::nullopt;
        T value = std::move(queue_.front());
        queue_.pop_front();
        return value;
    }

    void close() {
        {
            std::lock_guard lock(mutex_);
            closed_ = true;
        }
        ready_.notify_all();
    }

private:
    std::mutex mutex_;
    std::condition_variable ready_;
    std::deque<T> queue_;
    bool closed_ = false;
};

// Single writer draining a channel into a catalog, optionally appending to a log file.
class CatalogWriter {
public:
    explicit CatalogWriter(Catalog& catalog, std::optional<std::filesystem::path> log = std::nullopt);
    ~CatalogWriter();

    CatalogWriter(const CatalogWriter&) = delete;
    CatalogWriter& operator=(const CatalogWriter&) = delete;

    void send(KnotRecord record) { channel_.send(std::move(record)); }
    void finish();  // closes the channel and waits for the writer

private:
    Catalog& catalog_;
    std::optional<std::filesystem::path> log_;
    Channel<KnotRecord> channel_;
    std::thread thread_;
};

// Classifies every face for each n_z in the family window and records the knots.
void catalog_lissajous_family(Catalog& catalog, int n_x, int n_y, int workers = 1, bool wide_window = false);

// |L(2, n_y)| for odd n_y in [3, n_y_max], unknot excluded.
std::map<int, std::size_t> tabulate_L2(int n_y_max, int workers = 1, bool wide_window = false);

using CrossingTable = std::map<int, std::map<int, std::set<TwoBridgeFraction>>>;  // n_y -> crossing -> fractions

CrossingTable tabulate_by_crossing(const std::vector<int>& n_y_list, int workers = 1, bool wide_window = false);

std::string format_L2_counts(const std::map<int, std::size_t>& counts);
std::string format_crossing_table(const CrossingTable& table);

// Per crossing number: all 2-bridge knots, and those with Delta = 1 mod 2.
struct TwoBridgeCountRow {
    int crossing;
    std::size_t two_bridge;
    std::size_t delta_one_mod2;
};

std::vector<TwoBridgeCountRow> tabulate_two_bridge_counts(int cr_max, int workers = 1);
std::string format_two_bridge_counts(const std::vector<TwoBridgeCountRow>& rows);

}  // namespace knotforge
