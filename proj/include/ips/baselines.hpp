#pragma once

#include "ips/dataset.hpp"
#include "ips/patterns.hpp"
#include "ips/rng.hpp"

namespace ips {

// Draws, independently per attribute, two values uniformly from W_m and
// orders them. No coverage control: the result may cover nothing.
IntervalPattern sample_uniform_naive(const NumericalDataset& dataset, Rng& rng);

// Walks the attributes in a uniformly shuffled order, keeping the cover of
// the partial pattern non-empty: per attribute, the interval is drawn
// uniformly from the (a, b) pairs with at least one endpoint among the values
// of the currently covered objects. The pair is located by rank arithmetic
// rather than enumeration or rejection.
IntervalPattern sample_random_cover(const NumericalDataset& dataset, Rng& rng);

} // namespace ips
