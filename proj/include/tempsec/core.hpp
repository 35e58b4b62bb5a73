#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tempsec/rng.hpp"

namespace tempsec {

// Adversary-valued element. Items form a strict total order via the
// (value, id) pair, so no two distinct items ever compare equal.
struct Item {
    std::int64_t id = 0;
    double value = 0.0;
};

inline bool item_less(const Item& a, const Item& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.id < b.id;
}

inline bool item_greater(const Item& a, const Item& b) { return item_less(b, a); }

// Realized map item-id -> arrival time in [0,1).
struct ArrivalSchedule {
    struct Entry {
        std::int64_t id = 0;
        double t = 0.0;
    };
    std::vector<Entry> times;

    double time_of(std::int64_t id) const;
};

// Continuous arrival-time prior given as a (cdf, quantile) pair.
struct Prior {
    enum class Kind { Uniform, Power };
    Kind kind = Kind::Uniform;
    double param = 1.0; // exponent for Power: cdf(t) = t^param

    double cdf(double t) const;
    double quantile(double u) const;

    static Prior uniform() { return Prior{}; }
    static Prior power(double alpha) { return Prior{Kind::Power, alpha}; }

    std::string kind_name() const { return kind == Kind::Uniform ? "uniform" : "power"; }
};

struct Instance {
    std::vector<Item> items;
    Prior prior;
    double gamma = 0.0;   // rental duration, in [0,1]
    int budget_k = 1;     // clamped to ceil(capacity_d / gamma) on construction
    int capacity_d = 1;

    static Instance make(std::vector<Item> items, Prior prior, double gamma,
                         int budget_k, int capacity_d);
};

// Timestamped accepted set, ordered by accept time.
struct Selection {
    struct Accept {
        std::int64_t id = 0;
        double value = 0.0;
        double t = 0.0;
    };
    std::vector<Accept> accepted;

    double total_value() const;
    std::vector<double> times() const;
    bool empty() const { return accepted.empty(); }
    std::size_t size() const { return accepted.size(); }
};

// One item together with its realized arrival time.
struct Arrival {
    Item item;
    double t = 0.0;
};

// Replay order: ascending by (time, id).
using Stream = std::vector<Arrival>;

Stream make_stream(std::span<const Item> items, const ArrivalSchedule& schedule);

// Sum of the k largest values (all values if k >= |items|).
double top_k_value(std::span<const Item> items, int k);

// True iff every pair of distinct times differs by at least gamma.
bool is_gamma_independent(std::span<const double> times, double gamma);

// True iff no point of [0,1) is covered by more than d intervals [t, t+gamma).
bool is_capacity_feasible(std::span<const double> times, double gamma, int d);

// Inverse-transform sampling: each item's time is quantile(u) for an
// independent uniform u. Deterministic given the rng state.
ArrivalSchedule sample_schedule(std::span<const Item> items, const Prior& prior, Rng& rng);

// JSON serialization (see README for the document shapes).
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);
std::string schedule_to_json(const ArrivalSchedule& schedule);
ArrivalSchedule schedule_from_json(const std::string& text);

} // namespace tempsec
