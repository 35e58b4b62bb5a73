#pragma once

#include <optional>
#include <string>

#include "tempsec/core.hpp"

namespace tempsec {

// A value threshold. The empty state is the "absolute zero" sentinel and
// compares strictly below every item.
using Threshold = std::optional<Item>;

inline bool beats(const Item& x, const Threshold& t) {
    return !t.has_value() || item_greater(x, *t);
}

// Observe until time 1/e, then accept the first item beating the observed
// maximum. At most one item.
Selection continuous_secretary(const Stream& stream);

// Time-slice algorithm: partition [0,1) into slices of length 2*gamma, flip
// one fair coin choosing the left or right halves globally, and run the
// prior-aware continuous secretary (d=1) or a budget-d charter with gamma=0
// (d>1) inside each chosen half. Requires 0 < gamma <= 1/2.
Selection slice_gamma(const Stream& stream, const Prior& prior, double gamma,
                      int d, Rng& rng);

// Charter algorithm C_{k,gamma}: recursive halving with rank-ceil(k/2)
// threshold and greedy spaced acceptance in the second half.
Selection charter(const Stream& stream, int k, double gamma);

// Charter variant C*_{k,gamma}: pads the second half with 3*ceil(k/2)
// zero-value dummy items at fresh uniform times. Dummy ids start at
// (max real id + 1); dummy acceptances appear in the Selection with value 0.
Selection charter_star(const Stream& stream, int k, double gamma, Rng& rng);

// Stable algorithm names used by the CLI and result records:
// "continuous", "slice", "charter", "charter_star",
// "kleinberg" (charter with gamma forced to 0),
// plus the test baselines "oracle" and "none".
bool is_known_algorithm(const std::string& name);

} // namespace tempsec
