#pragma once

#include <optional>
#include <vector>

#include "liechar/root_datum.hpp"

namespace liechar {

struct OrbitRecord {
  Weight dominant_rep;
  BigInt length;
  std::optional<std::vector<Weight>> elements;
};

/// Unique dominant weight in the W-orbit (apply s_i while a_i < 0).
Weight dominant_representative(const RootDatum& datum, Weight weight);

/// Full orbit, duplicate-free, in breadth-first order from `weight`.
std::vector<Weight> orbit_elements(const RootDatum& datum, const Weight& weight);

OrbitRecord orbit(const RootDatum& datum, const Weight& weight);

/// |W| / |W_J| with J the zero coordinates. Throws NotDominant.
BigInt orbit_length(const RootDatum& datum, const Weight& dominant);

}  // namespace liechar
