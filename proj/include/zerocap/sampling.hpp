#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "zerocap/scalar.hpp"

namespace zerocap {

/// Discrete distribution over {0..n-1} sampled from one 64-bit draw.
///
/// Thresholds are ceil(cumulative/total * 2^64); outcome k is returned for
/// the first k with draw < threshold[k]. For rational weights the thresholds
/// are exact, so every outcome appears with probability equal to its weight
/// up to 2^-64.
class DiscreteSampler {
 public:
  DiscreteSampler() = default;
  /// Weights need not be normalized but must be nonnegative with a positive
  /// total.
  explicit DiscreteSampler(std::span<const Scalar> weights);

  std::size_t operator()(std::uint64_t draw) const;
  template <class Engine>
  std::size_t operator()(Engine& engine) const {
    return (*this)(static_cast<std::uint64_t>(engine()));
  }
  std::size_t size() const { return thresholds_.size(); }

 private:
  std::vector<unsigned __int128> thresholds_;
};

/// Independent stream for block `block` of a run seeded with `seed`.
std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block);

}  // namespace zerocap
