#include "tbk/ideal_points.hpp"

#include <algorithm>
#include <array>

#include "tbk/errors.hpp"
#include "tbk/surfaces.hpp"

namespace tbk {

namespace {

constexpr std::uint64_t kMaxTuples = 50'000'000;

// Valid residue tuples live in the box prod [1, |ni| - 1]; they are indexed in
// mixed radix with the first position most significant, which matches
// lexicographic order.
class TupleSpace {
 public:
  TupleSpace(const ContinuedFraction& cf, AlternationIndexing indexing) {
    if (!cf.admissible() || cf.entries.empty())
      throw InvalidArgument("ideal points need a nonempty admissible expansion, got " + cf.to_string());
    for (Entry a : cf.entries) moduli_.push_back(a < 0 ? -a : a);
    size_ = 1;
    for (auto n : moduli_) {
      size_ *= static_cast<std::uint64_t>(n - 1);
      if (size_ > kMaxTuples) throw InvalidArgument("residue tuple space too large for " + cf.to_string());
    }
    const std::size_t parity = indexing == AlternationIndexing::negate_odd_positions ? 0 : 1;
    for (std::size_t i = 0; i < moduli_.size(); ++i) alternate_.push_back(i % 2 == parity);
  }

  std::uint64_t size() const { return size_; }

  std::vector<std::int64_t> decode(std::uint64_t index) const {
    std::vector<std::int64_t> k(moduli_.size());
    for (std::size_t i = moduli_.size(); i-- > 0;) {
      const auto radix = static_cast<std::uint64_t>(moduli_[i] - 1);
      k[i] = static_cast<std::int64_t>(index % radix) + 1;
      index /= radix;
    }
    return k;
  }

  std::uint64_t encode(const std::vector<std::int64_t>& k) const {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
      index = index * static_cast<std::uint64_t>(moduli_[i] - 1) + static_cast<std::uint64_t>(k[i] - 1);
    return index;
  }

  // Excludes the tuple with every ki = |ni|/2.
  bool valid(const std::vector<std::int64_t>& k) const {
    for (std::size_t i = 0; i < k.size(); ++i)
      if (moduli_[i] % 2 != 0 || k[i] != moduli_[i] / 2) return true;
    return false;
  }

  std::vector<std::int64_t> negate_all(std::vector<std::int64_t> k) const {
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = moduli_[i] - k[i];
    return k;
  }

  std::vector<std::int64_t> negate_alternate(std::vector<std::int64_t> k) const {
    for (std::size_t i = 0; i < k.size(); ++i)
      if (alternate_[i]) k[i] = moduli_[i] - k[i];
    return k;
  }

  std::array<std::vector<std::int64_t>, 4> orbit(const std::vector<std::int64_t>& k) const {
    auto g = negate_all(k);
    return {k, g, negate_alternate(k), negate_alternate(g)};
  }

 private:
  std::vector<std::int64_t> moduli_;
  std::vector<bool> alternate_;
  std::uint64_t size_ = 0;
};

}  // namespace

std::vector<IdealPointClass> ideal_point_classes(const ContinuedFraction& expansion,
                                                 AlternationIndexing indexing) {
  TupleSpace space(expansion, indexing);
  std::vector<IdealPointClass> out;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    auto k = space.decode(i);
    if (!space.valid(k)) continue;
    auto images = space.orbit(k);
    if (std::all_of(images.begin(), images.end(), [&](const auto& g) { return k <= g; }))
      out.push_back({std::move(k)});
  }
  return out;
}

std::uint64_t count_ideal_points_by_orbits(const ContinuedFraction& expansion,
                                           AlternationIndexing indexing) {
  return ideal_point_orbit_sizes(expansion, indexing).size();
}

std::vector<std::size_t> ideal_point_orbit_sizes(const ContinuedFraction& expansion,
                                                 AlternationIndexing indexing) {
  TupleSpace space(expansion, indexing);
  std::vector<bool> seen(space.size(), false);
  std::vector<std::size_t> sizes;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    if (seen[i]) continue;
    auto k = space.decode(i);
    if (!space.valid(k)) continue;
    std::size_t distinct = 0;
    for (const auto& g : space.orbit(k)) {
      auto j = space.encode(g);
      if (!seen[j]) {
        seen[j] = true;
        ++distinct;
      }
    }
    sizes.push_back(distinct);
  }
  return sizes;
}

std::map<std::int64_t, std::uint64_t> detected_slopes_with_counts(const Rational& p_over_q) {
  std::map<std::int64_t, std::uint64_t> counts;
  for (const auto& e : enumerate_admissible(p_over_q)) {
    auto surface = make_surface(e.cf, p_over_q);
    counts[boundary_slope(surface)] += ideal_point_classes(surface.expansion).size();
  }
  return counts;
}

}  // namespace tbk
