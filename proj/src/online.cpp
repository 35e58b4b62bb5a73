#include "tempsec/online.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tempsec {

namespace {

constexpr double kInvE = 0.36787944117144233; // 1/e

void sort_selection(Selection& sel) {
    std::sort(sel.accepted.begin(), sel.accepted.end(),
              [](const Selection::Accept& a, const Selection::Accept& b) {
                  if (a.t != b.t) return a.t < b.t;
                  return a.id < b.id;
              });
}

// tau-th largest item among arrivals, or absolute zero if fewer than tau.
Threshold rank_threshold(const Stream& arrivals, int tau) {
    if (static_cast<int>(arrivals.size()) < tau) return std::nullopt;
    std::vector<Item> items;
    items.reserve(arrivals.size());
    for (const auto& a : arrivals) items.push_back(a.item);
    std::nth_element(items.begin(), items.begin() + (tau - 1), items.end(), item_greater);
    return items[tau - 1];
}

} // namespace

Selection continuous_secretary(const Stream& stream) {
    Selection sel;
    Threshold best_observed; // absolute zero until something arrives
    for (const auto& a : stream) {
        if (a.t < kInvE) {
            if (!best_observed || item_greater(a.item, *best_observed))
                best_observed = a.item;
        } else if (beats(a.item, best_observed)) {
            sel.accepted.push_back({a.item.id, a.item.value, a.t});
            break;
        }
    }
    return sel;
}

Selection charter(const Stream& stream, int k, double gamma) {
    if (k < 1) throw std::invalid_argument("charter: k must be positive");
    if (k == 1) return continuous_secretary(stream);

    // Recursive copy C_{floor(k/2), 2*gamma} on [0,1/2) with theta' = 2*theta.
    Stream first_half;
    for (const auto& a : stream) {
        if (a.t >= 0.5) break;
        first_half.push_back({a.item, 2.0 * a.t});
    }
    Selection sub = charter(first_half, k / 2, 2.0 * gamma);

    Selection sel;
    for (const auto& a : sub.accepted)
        sel.accepted.push_back({a.id, a.value, a.t / 2.0});

    const int tau = (k + 1) / 2;
    Threshold threshold = rank_threshold(first_half, tau);

    double last_accept = sel.empty() ? -std::numeric_limits<double>::infinity()
                                     : sel.accepted.back().t;
    int accepted = static_cast<int>(sel.size());
    for (const auto& a : stream) {
        if (a.t < 0.5) continue;
        if (accepted >= k) break;
        if (beats(a.item, threshold) && a.t >= last_accept + gamma) {
            sel.accepted.push_back({a.item.id, a.item.value, a.t});
            last_accept = a.t;
            ++accepted;
        }
    }
    return sel;
}

Selection charter_star(const Stream& stream, int k, double gamma, Rng& rng) {
    if (k < 1) throw std::invalid_argument("charter_star: k must be positive");
    if (k == 1) return continuous_secretary(stream);

    const int tau = (k + 1) / 2;

    std::int64_t dummy_base = 0;
    for (const auto& a : stream) dummy_base = std::max(dummy_base, a.item.id + 1);
    Stream dummies;
    for (int i = 0; i < 3 * tau; ++i)
        dummies.push_back({Item{dummy_base + i, 0.0}, rng.uniform()});
    std::sort(dummies.begin(), dummies.end(), [](const Arrival& a, const Arrival& b) {
        if (a.t != b.t) return a.t < b.t;
        return a.item.id < b.item.id;
    });

    // First half is emulated exactly as the plain charter on real items.
    Stream first_half;
    for (const auto& a : stream) {
        if (a.t >= 0.5) break;
        first_half.push_back({a.item, 2.0 * a.t});
    }
    Selection sub = charter(first_half, k / 2, 2.0 * gamma);

    Selection sel;
    for (const auto& a : sub.accepted)
        sel.accepted.push_back({a.id, a.value, a.t / 2.0});

    // Threshold over real + dummy first-half arrivals.
    Stream pool = first_half;
    for (const auto& d : dummies)
        if (d.t < 0.5) pool.push_back(d);
    Threshold threshold = rank_threshold(pool, tau);

    // Second half: merged real + dummy arrivals in time order.
    Stream second;
    for (const auto& a : stream)
        if (a.t >= 0.5) second.push_back(a);
    for (const auto& d : dummies)
        if (d.t >= 0.5) second.push_back(d);
    std::sort(second.begin(), second.end(), [](const Arrival& a, const Arrival& b) {
        if (a.t != b.t) return a.t < b.t;
        return a.item.id < b.item.id;
    });

    double last_accept = sel.empty() ? -std::numeric_limits<double>::infinity()
                                     : sel.accepted.back().t;
    int accepted = static_cast<int>(sel.size());
    for (const auto& a : second) {
        if (accepted >= k) break;
        if (beats(a.item, threshold) && a.t >= last_accept + gamma) {
            sel.accepted.push_back({a.item.id, a.item.value, a.t});
            last_accept = a.t;
            ++accepted;
        }
    }
    return sel;
}

Selection slice_gamma(const Stream& stream, const Prior& prior, double gamma,
                      int d, Rng& rng) {
    if (!(gamma > 0.0) || gamma > 0.5)
        throw std::invalid_argument("slice_gamma: requires 0 < gamma <= 1/2");
    if (d < 1) throw std::invalid_argument("slice_gamma: d must be positive");

    const bool use_left = rng.coin();
    Selection sel;

    for (double slice_start = 0.0; slice_start < 1.0; slice_start += 2.0 * gamma) {
        const double slice_end = std::min(slice_start + 2.0 * gamma, 1.0);
        // The final partial slice keeps a left half of min(gamma, remaining).
        double h0, h1;
        if (use_left) {
            h0 = slice_start;
            h1 = std::min(slice_start + gamma, slice_end);
        } else {
            h0 = std::min(slice_start + gamma, slice_end);
            h1 = slice_end;
        }
        if (h0 >= h1) continue;

        const double mass = prior.cdf(h1) - prior.cdf(h0);
        if (mass <= 0.0) continue; // no prior mass: skip the half

        Stream half;
        for (const auto& a : stream)
            if (a.t >= h0 && a.t < h1) half.push_back(a);
        if (half.empty()) continue;

        if (d == 1) {
            // Modified continuous secretary: observe while the conditional
            // CDF of the half is below 1/e.
            const double t_star = prior.quantile(prior.cdf(h0) + mass * kInvE);
            Threshold best_observed;
            for (const auto& a : half) {
                if (a.t < t_star) {
                    if (!best_observed || item_greater(a.item, *best_observed))
                        best_observed = a.item;
                } else if (beats(a.item, best_observed)) {
                    sel.accepted.push_back({a.item.id, a.item.value, a.t});
                    break;
                }
            }
        } else {
            // Budget-d Kleinberg inside the half: remap arrivals through the
            // conditional CDF so they are uniform in [0,1).
            Stream remapped;
            remapped.reserve(half.size());
            for (const auto& a : half) {
                double u = (prior.cdf(a.t) - prior.cdf(h0)) / mass;
                remapped.push_back({a.item, std::clamp(u, 0.0, std::nextafter(1.0, 0.0))});
            }
            Selection picked = charter(remapped, d, 0.0);
            for (const auto& p : picked.accepted) {
                for (const auto& a : half) {
                    if (a.item.id == p.id) {
                        sel.accepted.push_back({a.item.id, a.item.value, a.t});
                        break;
                    }
                }
            }
        }
    }
    sort_selection(sel);
    return sel;
}

bool is_known_algorithm(const std::string& name) {
    return name == "continuous" || name == "slice" || name == "charter" ||
           name == "charter_star" || name == "kleinberg" || name == "oracle" ||
           name == "none";
}

} // namespace tempsec
