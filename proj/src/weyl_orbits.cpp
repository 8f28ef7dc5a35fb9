#include "liechar/weyl_orbits.hpp"

#include <unordered_set>

namespace liechar {

Weight dominant_representative(const RootDatum& datum, Weight weight) {
  const auto& refl = datum.reflections();
  for (;;) {
    Eigen::Index i = 0;
    while (i < weight.size() && weight[i] >= 0) ++i;
    if (i == weight.size()) return weight;
    weight = weight * refl[static_cast<std::size_t>(i)];
  }
}

std::vector<Weight> orbit_elements(const RootDatum& datum, const Weight& weight) {
  std::vector<Weight> out{weight};
  std::unordered_set<IntRow, RowHash, RowEqual> seen{weight};
  const auto& refl = datum.reflections();
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t i = 0; i < refl.size(); ++i) {
      // s_i fixes x when <x, alpha_i^vee> = x_i is zero.
      if (out[k][static_cast<Eigen::Index>(i)] == 0) continue;
      Weight next = out[k] * refl[i];
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

OrbitRecord orbit(const RootDatum& datum, const Weight& weight) {
  OrbitRecord rec;
  rec.dominant_rep = dominant_representative(datum, weight);
  rec.elements = orbit_elements(datum, weight);
  rec.length = BigInt(rec.elements->size());
  return rec;
}

BigInt orbit_length(const RootDatum& datum, const Weight& dominant) {
  if (!is_dominant(dominant))
    throw Error(ErrorCode::NotDominant, "weight " + format_row(dominant) + " is not dominant");
  std::vector<int> zeros;
  for (Eigen::Index i = 0; i < dominant.size(); ++i)
    if (dominant[i] == 0) zeros.push_back(static_cast<int>(i));
  return datum.weyl_order() / datum.parabolic_order(zeros);
}

}  // namespace liechar
