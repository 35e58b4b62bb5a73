#include "tempsec/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace tempsec {

double ArrivalSchedule::time_of(std::int64_t id) const {
    for (const auto& e : times)
        if (e.id == id) return e.t;
    throw std::out_of_range("ArrivalSchedule: unknown item id");
}

double Prior::cdf(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    switch (kind) {
    case Kind::Uniform: return t;
    case Kind::Power: return std::pow(t, param);
    }
    return t;
}

double Prior::quantile(double u) const {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return std::nextafter(1.0, 0.0);
    switch (kind) {
    case Kind::Uniform: return u;
    case Kind::Power: return std::pow(u, 1.0 / param);
    }
    return u;
}

Instance Instance::make(std::vector<Item> items, Prior prior, double gamma,
                        int budget_k, int capacity_d) {
    if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("gamma must be in [0,1]");
    if (budget_k < 1) throw std::invalid_argument("budget_k must be positive");
    if (capacity_d < 1) throw std::invalid_argument("capacity_d must be positive");
    Instance inst;
    inst.items = std::move(items);
    inst.prior = prior;
    inst.gamma = gamma;
    inst.capacity_d = capacity_d;
    // Budgets beyond ceil(d/gamma) can never be spent within [0,1).
    if (gamma > 0.0) {
        double cap = std::ceil(static_cast<double>(capacity_d) / gamma);
        if (cap < static_cast<double>(budget_k)) budget_k = static_cast<int>(cap);
    }
    inst.budget_k = budget_k;
    return inst;
}

double Selection::total_value() const {
    double s = 0.0;
    for (const auto& a : accepted) s += a.value;
    return s;
}

std::vector<double> Selection::times() const {
    std::vector<double> ts;
    ts.reserve(accepted.size());
    for (const auto& a : accepted) ts.push_back(a.t);
    return ts;
}

Stream make_stream(std::span<const Item> items, const ArrivalSchedule& schedule) {
    if (items.size() != schedule.times.size())
        throw std::invalid_argument("make_stream: item/schedule size mismatch");
    Stream stream;
    stream.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& e = schedule.times[i];
        if (e.id != items[i].id)
            stream.push_back(Arrival{items[i], schedule.time_of(items[i].id)});
        else
            stream.push_back(Arrival{items[i], e.t});
    }
    std::sort(stream.begin(), stream.end(), [](const Arrival& a, const Arrival& b) {
        if (a.t != b.t) return a.t < b.t;
        return a.item.id < b.item.id;
    });
    return stream;
}

double top_k_value(std::span<const Item> items, int k) {
    if (k <= 0 || items.empty()) return 0.0;
    std::vector<double> values;
    values.reserve(items.size());
    for (const auto& it : items) values.push_back(it.value);
    if (static_cast<std::size_t>(k) >= values.size()) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    std::nth_element(values.begin(), values.begin() + k, values.end(), std::greater<>());
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += values[i];
    return s;
}

bool is_gamma_independent(std::span<const double> times, double gamma) {
    if (gamma <= 0.0) return true;
    std::vector<double> ts(times.begin(), times.end());
    std::sort(ts.begin(), ts.end());
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (ts[i] - ts[i - 1] < gamma) return false;
    return true;
}

bool is_capacity_feasible(std::span<const double> times, double gamma, int d) {
    if (d < 1) return false;
    if (gamma <= 0.0) return true;
    if (static_cast<std::size_t>(d) >= times.size()) return true;
    std::vector<double> ts(times.begin(), times.end());
    std::sort(ts.begin(), ts.end());
    // For each time, fewer than d earlier times may lie in (t - gamma, t].
    std::size_t lo = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        while (ts[lo] <= ts[i] - gamma) ++lo;
        if (i - lo >= static_cast<std::size_t>(d)) return false;
    }
    return true;
}

ArrivalSchedule sample_schedule(std::span<const Item> items, const Prior& prior, Rng& rng) {
    ArrivalSchedule schedule;
    schedule.times.reserve(items.size());
    for (const auto& it : items)
        schedule.times.push_back({it.id, prior.quantile(rng.uniform())});
    return schedule;
}

std::string instance_to_json(const Instance& inst) {
    nlohmann::json j;
    j["gamma"] = inst.gamma;
    j["budget_k"] = inst.budget_k;
    j["capacity_d"] = inst.capacity_d;
    j["prior"] = {{"kind", inst.prior.kind_name()}, {"param", inst.prior.param}};
    auto items = nlohmann::json::array();
    for (const auto& it : inst.items)
        items.push_back({{"id", it.id}, {"value", it.value}});
    j["items"] = std::move(items);
    return j.dump();
}

Instance instance_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Prior prior;
    std::string kind = j.at("prior").at("kind").get<std::string>();
    if (kind == "uniform") prior = Prior::uniform();
    else if (kind == "power") prior = Prior::power(j.at("prior").at("param").get<double>());
    else throw std::invalid_argument("unknown prior kind: " + kind);
    std::vector<Item> items;
    for (const auto& ji : j.at("items"))
        items.push_back({ji.at("id").get<std::int64_t>(), ji.at("value").get<double>()});
    return Instance::make(std::move(items), prior, j.at("gamma").get<double>(),
                          j.at("budget_k").get<int>(), j.at("capacity_d").get<int>());
}

std::string schedule_to_json(const ArrivalSchedule& schedule) {
    auto j = nlohmann::json::array();
    for (const auto& e : schedule.times)
        j.push_back({{"id", e.id}, {"t", e.t}});
    return j.dump();
}

ArrivalSchedule schedule_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    ArrivalSchedule schedule;
    for (const auto& je : j)
        schedule.times.push_back({je.at("id").get<std::int64_t>(), je.at("t").get<double>()});
    return schedule;
}

} // namespace tempsec
