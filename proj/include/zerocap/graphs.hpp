#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zerocap/channels.hpp"
#include "zerocap/parallel.hpp"

namespace zerocap {

/// Dynamic bitset over 64-bit words.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t bit_count() const { return bits_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set_all();

  bool none() const;
  std::size_t count() const;
  /// Index of the lowest set bit, or bit_count() when empty.
  std::size_t first() const;

  Bitset& operator&=(const Bitset& rhs);
  Bitset& operator|=(const Bitset& rhs);
  /// this &= ~rhs
  Bitset& subtract(const Bitset& rhs);
  friend Bitset operator&(Bitset lhs, const Bitset& rhs) { return lhs &= rhs; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph with bitset rows; symmetric, loop-free.
class ConfusabilityGraph {
 public:
  explicit ConfusabilityGraph(std::size_t vertex_count, std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  bool has_edge(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  void add_edge(std::size_t u, std::size_t v);
  const Bitset& neighbors(std::size_t v) const { return adjacency_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_complete() const;

  /// Structural equality (labels ignored).
  friend bool operator==(const ConfusabilityGraph& lhs, const ConfusabilityGraph& rhs) {
    return lhs.adjacency_ == rhs.adjacency_;
  }

 private:
  std::vector<Bitset> adjacency_;
  std::vector<std::string> labels_;
};

ConfusabilityGraph make_complete_graph(std::size_t n);
ConfusabilityGraph make_cycle_graph(std::size_t n);
ConfusabilityGraph make_empty_graph(std::size_t n);
/// G(n, p) with a seeded engine; used by the property tests and benchmarks.
ConfusabilityGraph make_random_graph(std::size_t n, double edge_probability, std::uint64_t seed);

/// Edge (i, i') iff some output is positive under both inputs. Floating
/// entries count as positive above 1e-12.
ConfusabilityGraph confusability_graph(const Channel& c);

/// Vertices (u1, u2) flattened as u1 * |V2| + u2, adjacent iff each
/// coordinate is equal or adjacent (and the pairs differ).
ConfusabilityGraph strong_product(const ConfusabilityGraph& first,
                                  const ConfusabilityGraph& second);

inline constexpr std::size_t kDefaultAlphaLimit = 40;
inline constexpr std::size_t kBruteForceAlphaLimit = 24;

/// Exact independence number by branch and bound with greedy clique-cover
/// bounds. The parallel path splits the root branches across threads; the
/// result does not depend on the thread count.
std::size_t independence_number(const ConfusabilityGraph& g, Exec exec = Exec::parallel,
                                std::size_t limit = kDefaultAlphaLimit);

/// Reference oracle: enumerates all 2^n vertex subsets (n <= 24).
std::size_t independence_number_bruteforce(const ConfusabilityGraph& g);

struct CapacityResult {
  std::size_t alpha = 0;
  double bits = 0.0;
  /// log2(alpha) when alpha is a power of two.
  std::optional<int> exact_bits;
  bool complete = false;
};

/// One-shot zero-error capacity log2 alpha(G(c)).
CapacityResult zero_error_capacity_oneshot(const Channel& c, Exec exec = Exec::parallel,
                                           std::size_t limit = kDefaultAlphaLimit);

}  // namespace zerocap
