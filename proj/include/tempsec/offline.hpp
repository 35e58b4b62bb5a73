#pragma once

#include <span>
#include <vector>

#include "tempsec/core.hpp"

namespace tempsec {

// Exact gamma-independent optimum of size <= k (d=1 semantics), by dynamic
// programming over items sorted by arrival time with binary-searched
// predecessors. O(n*k).
Selection optimal_budgeted(std::span<const Item> items, const ArrivalSchedule& schedule,
                           double gamma, int k);

// Exhaustive optimum over all subsets passing is_capacity_feasible with
// size <= k. Rejects |items| > 20.
Selection brute_force_optimal(std::span<const Item> items, const ArrivalSchedule& schedule,
                              double gamma, int k, int d);

// Left-to-right scan accepting a time iff >= gamma beyond the last accepted.
// Output size equals m(Z, gamma), the maximum-cardinality gamma-independent
// subset (greedy is optimal for unit intervals).
std::vector<double> greedy_independent(std::span<const double> sorted_times, double gamma);

// Left-to-right scan accepting a time iff fewer than d accepted times lie in
// (t - gamma, t].
std::vector<double> greedy_capacity_d(std::span<const double> sorted_times, double gamma, int d);

// { x in times : |[x - gamma, x) ∩ times| < d }. Always capacity-d feasible.
std::vector<double> filter_y_prime(std::span<const double> times, double gamma, int d);

// Maximum cardinality of a capacity-d gamma-independent subset, by
// enumeration. Test oracle; rejects |times| > 20.
int brute_force_max_cardinality(std::span<const double> times, double gamma, int d);

} // namespace tempsec
