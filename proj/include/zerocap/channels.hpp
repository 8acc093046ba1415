#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zerocap/scalar.hpp"

namespace zerocap {

/// Product of finite factors with a row-major bijection between flat
/// indices and tuples. Each factor may carry a display offset (the o1 factor
/// of N_m and M_m is labelled from 1).
class IndexSpace {
 public:
  IndexSpace() = default;
  explicit IndexSpace(std::vector<int> factors, std::vector<int> offsets = {});
  static IndexSpace flat(int size) { return IndexSpace({size}); }
  static IndexSpace product(const IndexSpace& first, const IndexSpace& second);

  std::size_t size() const { return size_; }
  const std::vector<int>& factors() const { return factors_; }
  const std::vector<int>& offsets() const { return offsets_; }

  /// Zero-based tuple for a flat index.
  std::vector<int> unflatten(std::size_t index) const;
  std::size_t flatten(std::span<const int> tuple) const;
  /// Tuple with display offsets applied, and its inverse.
  std::vector<int> label(std::size_t index) const;
  std::size_t from_label(std::span<const int> label) const;

  friend bool operator==(const IndexSpace&, const IndexSpace&) = default;

 private:
  std::vector<int> factors_;
  std::vector<int> offsets_;
  std::size_t size_ = 1;
};

/// Column-stochastic matrix p(out|in). Immutable; the constructor checks
/// shape and mode only (see make_channel / validate_channel).
class Channel {
 public:
  /// `columns` holds one block of output_space.size() entries per input.
  Channel(IndexSpace input_space, IndexSpace output_space, std::vector<Scalar> columns);

  const IndexSpace& input_space() const { return input_space_; }
  const IndexSpace& output_space() const { return output_space_; }
  std::size_t input_count() const { return input_space_.size(); }
  std::size_t output_count() const { return output_space_.size(); }
  NumericMode mode() const { return mode_; }

  /// p(out | in)
  const Scalar& operator()(std::size_t out, std::size_t in) const {
    return entries_[in * output_count() + out];
  }
  std::span<const Scalar> column(std::size_t in) const {
    return std::span<const Scalar>(entries_).subspan(in * output_count(), output_count());
  }

  friend bool operator==(const Channel& lhs, const Channel& rhs);

 private:
  IndexSpace input_space_;
  IndexSpace output_space_;
  NumericMode mode_;
  std::vector<Scalar> entries_;
};

/// The permutation family behind N_m and M_m: 0 is fixed and a nonzero
/// symbol s maps to ((s - 1 + shift) mod (m - 1)) + 1.
int pi_perm(int m, int shift, int symbol);

/// Additive inverse modulo m.
int pi_hat(int m, int u);

/// N_m: inputs (i1, i2) in {0,1} x {0..m-1}; outputs (o1, o2) in
/// {1..m+1} x {0..m-1}. o1 is uniform with weight 1/(m+1); o2 = i1 on
/// o1 = 1, i2 on o1 = 2, and i1 + pi_perm(m, o1 - 3, i2) (mod m) otherwise.
Channel make_Nm(int m);

/// M_m: inputs (i1, i2) in {0..m-1} x {0,1}; outputs (o1, o2) in
/// {1..m(m-1)+1} x {0..m-1}; o1 uniform. o1 = 1 gives o2 = i1. Block j
/// covers o1 in (m-1)j+2 .. (m-1)j+m and gives
/// o2 = i1 + pi_perm(m, o1 - ((m-1)j+2), i2 xor [i1 == j && j != 0]) (mod m).
///
/// Two block layouts circulate for this family: the one above, with the
/// [i1 == j] flip, and a shorter one without the flip whose blocks start at
/// o1 = 2, m+1, ..., (m-1)^2. Only the flipped form gives every output
/// exactly two confusable inputs and lets block j be decoded with y = j, so
/// it is the one built here.
Channel make_Mm(int m);

Channel make_identity_channel(int n);

/// Validating constructor: throws std::invalid_argument carrying the report
/// when the columns are not stochastic.
Channel make_channel(IndexSpace input_space, IndexSpace output_space,
                     const std::vector<std::vector<Scalar>>& columns);

ValidationReport validate_channel(const Channel& c);

/// Product channel with row-major flattening (first factor most significant).
Channel tensor_channels(const Channel& first, const Channel& second);

Channel convert(const Channel& c, NumericMode mode);

/// Exact for rational channels: a 64-bit uniform draw is compared against
/// ceil(cumulative * 2^64).
std::size_t sample_output(const Channel& c, std::size_t input, std::uint64_t seed);
std::vector<std::size_t> sample_outputs(const Channel& c, std::size_t input, std::size_t count,
                                        std::uint64_t seed);

}  // namespace zerocap
