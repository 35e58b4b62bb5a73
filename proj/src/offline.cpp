#include "tempsec/offline.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace tempsec {

Selection optimal_budgeted(std::span<const Item> items, const ArrivalSchedule& schedule,
                           double gamma, int k) {
    if (k < 1) throw std::invalid_argument("optimal_budgeted: k must be positive");
    Stream arrivals = make_stream(items, schedule);
    const int n = static_cast<int>(arrivals.size());
    Selection sel;
    if (n == 0) return sel;

    std::vector<double> ts(n);
    for (int i = 0; i < n; ++i) ts[i] = arrivals[i].t;

    // pred[i]: number of arrivals usable before i, i.e. arrivals j with
    // t_j <= t_i - gamma (and j < i when gamma == 0 admits equal times).
    std::vector<int> pred(n);
    for (int i = 0; i < n; ++i) {
        auto it = std::upper_bound(ts.begin(), ts.begin() + i + 1, ts[i] - gamma);
        pred[i] = std::min(static_cast<int>(it - ts.begin()), i);
    }

    // best[i][j]: max value over the first i arrivals picking <= j of them.
    const int cols = k + 1;
    std::vector<double> best(static_cast<std::size_t>(n + 1) * cols, 0.0);
    auto cell = [&](int i, int j) -> double& { return best[static_cast<std::size_t>(i) * cols + j]; };
    for (int i = 1; i <= n; ++i) {
        const double v = arrivals[i - 1].item.value;
        const int p = pred[i - 1];
        for (int j = 1; j <= k; ++j) {
            double skip = cell(i - 1, j);
            double take = v + cell(p, j - 1);
            cell(i, j) = std::max(skip, take);
        }
        cell(i, 0) = 0.0;
    }

    // Backtrack; on exact value ties prefer taking the current arrival.
    int i = n, j = k;
    while (i > 0 && j > 0) {
        const double v = arrivals[i - 1].item.value;
        const int p = pred[i - 1];
        if (v + cell(p, j - 1) >= cell(i - 1, j)) {
            sel.accepted.push_back({arrivals[i - 1].item.id, v, arrivals[i - 1].t});
            i = p;
            --j;
        } else {
            --i;
        }
    }
    std::reverse(sel.accepted.begin(), sel.accepted.end());
    return sel;
}

namespace {

bool id_set_less(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

Selection brute_force_optimal(std::span<const Item> items, const ArrivalSchedule& schedule,
                              double gamma, int k, int d) {
    const int n = static_cast<int>(items.size());
    if (n > 20) throw std::invalid_argument("brute_force_optimal: |items| > 20");
    Stream arrivals = make_stream(items, schedule);

    double best_value = 0.0;
    std::uint32_t best_mask = 0;
    std::vector<std::int64_t> best_ids;
    std::vector<double> ts;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > k) continue;
        ts.clear();
        double value = 0.0;
        bool feasible = true;
        // arrivals are time-sorted, so ts is too.
        for (int i = 0; i < n && feasible; ++i) {
            if (!(mask >> i & 1u)) continue;
            const double t = arrivals[i].t;
            if (gamma > 0.0) {
                int overlap = 0;
                for (auto it = ts.rbegin(); it != ts.rend() && *it > t - gamma; ++it) ++overlap;
                if (overlap >= d) feasible = false;
            }
            ts.push_back(t);
            value += arrivals[i].item.value;
        }
        if (!feasible || value < best_value) continue;
        std::vector<std::int64_t> ids;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) ids.push_back(arrivals[i].item.id);
        std::sort(ids.begin(), ids.end());
        if (value > best_value || id_set_less(ids, best_ids)) {
            best_value = value;
            best_mask = mask;
            best_ids = std::move(ids);
        }
    }
    Selection sel;
    for (int i = 0; i < n; ++i)
        if (best_mask >> i & 1u)
            sel.accepted.push_back({arrivals[i].item.id, arrivals[i].item.value, arrivals[i].t});
    return sel;
}

std::vector<double> greedy_independent(std::span<const double> sorted_times, double gamma) {
    std::vector<double> out;
    double last = -std::numeric_limits<double>::infinity();
    for (double t : sorted_times) {
        if (t >= last + gamma) {
            out.push_back(t);
            last = t;
        }
    }
    return out;
}

std::vector<double> greedy_capacity_d(std::span<const double> sorted_times, double gamma, int d) {
    std::vector<double> out;
    for (double t : sorted_times) {
        int overlap = 0;
        for (auto it = out.rbegin(); it != out.rend() && *it > t - gamma; ++it) {
            if (++overlap >= d) break;
        }
        if (overlap < d) out.push_back(t);
    }
    return out;
}

std::vector<double> filter_y_prime(std::span<const double> times, double gamma, int d) {
    std::vector<double> out;
    for (double x : times) {
        int count = 0;
        for (double y : times)
            if (y >= x - gamma && y < x) ++count;
        if (count < d) out.push_back(x);
    }
    return out;
}

int brute_force_max_cardinality(std::span<const double> times, double gamma, int d) {
    const int n = static_cast<int>(times.size());
    if (n > 20) throw std::invalid_argument("brute_force_max_cardinality: |times| > 20");
    std::vector<double> sorted(times.begin(), times.end());
    std::sort(sorted.begin(), sorted.end());
    int best = 0;
    std::vector<double> ts;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) continue;
        ts.clear();
        bool feasible = true;
        for (int i = 0; i < n && feasible; ++i) {
            if (!(mask >> i & 1u)) continue;
            const double t = sorted[i];
            if (gamma > 0.0) {
                int overlap = 0;
                for (auto it = ts.rbegin(); it != ts.rend() && *it > t - gamma; ++it) ++overlap;
                if (overlap >= d) feasible = false;
            }
            ts.push_back(t);
        }
        if (feasible) best = size;
    }
    return best;
}

} // namespace tempsec
