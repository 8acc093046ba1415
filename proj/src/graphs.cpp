#include "zerocap/graphs.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace zerocap {

void Bitset::set_all() {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  if (bits_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
  }
}

bool Bitset::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Bitset::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t Bitset::first() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return bits_;
}

Bitset& Bitset::operator&=(const Bitset& rhs) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= rhs.words_[k];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& rhs) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= rhs.words_[k];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& rhs) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~rhs.words_[k];
  return *this;
}

ConfusabilityGraph::ConfusabilityGraph(std::size_t vertex_count, std::vector<std::string> labels)
    : adjacency_(vertex_count, Bitset(vertex_count)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != vertex_count) {
    throw std::invalid_argument("graph labels do not match the vertex count");
  }
}

std::size_t ConfusabilityGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

void ConfusabilityGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count() || v >= vertex_count()) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("confusability graphs have no self-loops");
  adjacency_[u].set(v);
  adjacency_[v].set(u);
}

bool ConfusabilityGraph::is_complete() const {
  const std::size_t n = vertex_count();
  return edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

ConfusabilityGraph make_complete_graph(std::size_t n) {
  ConfusabilityGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

ConfusabilityGraph make_cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  ConfusabilityGraph g(n);
  for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

ConfusabilityGraph make_empty_graph(std::size_t n) { return ConfusabilityGraph(n); }

ConfusabilityGraph make_random_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::bernoulli_distribution coin(edge_probability);
  ConfusabilityGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(engine)) g.add_edge(u, v);
  return g;
}

ConfusabilityGraph confusability_graph(const Channel& c) {
  const std::size_t n = c.input_count();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = "(";
    const auto label = c.input_space().label(i);
    for (std::size_t k = 0; k < label.size(); ++k) s += (k ? "," : "") + std::to_string(label[k]);
    labels.push_back(s + ")");
  }
  // support[out] = inputs reaching that output
  std::vector<Bitset> support(c.output_count(), Bitset(n));
  for (std::size_t in = 0; in < n; ++in)
    for (std::size_t out = 0; out < c.output_count(); ++out)
      if (c(out, in).is_positive(1e-12)) support[out].set(in);

  ConfusabilityGraph g(n, std::move(labels));
  for (const auto& s : support) {
    for (std::size_t u = s.first(); u < n; ++u) {
      if (!s.test(u)) continue;
      for (std::size_t v = u + 1; v < n; ++v)
        if (s.test(v)) g.add_edge(u, v);
    }
  }
  return g;
}

ConfusabilityGraph strong_product(const ConfusabilityGraph& first,
                                  const ConfusabilityGraph& second) {
  const std::size_t n1 = first.vertex_count();
  const std::size_t n2 = second.vertex_count();
  std::vector<std::string> labels;
  if (!first.labels().empty() && !second.labels().empty()) {
    for (std::size_t u1 = 0; u1 < n1; ++u1)
      for (std::size_t u2 = 0; u2 < n2; ++u2)
        labels.push_back("(" + first.labels()[u1] + "," + second.labels()[u2] + ")");
  }
  ConfusabilityGraph g(n1 * n2, std::move(labels));
  auto close = [](const ConfusabilityGraph& h, std::size_t u, std::size_t v) {
    return u == v || h.has_edge(u, v);
  };
  for (std::size_t u = 0; u < n1 * n2; ++u) {
    for (std::size_t v = u + 1; v < n1 * n2; ++v) {
      if (close(first, u / n2, v / n2) && close(second, u % n2, v % n2)) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

// Maximum independent set search. A clique of g holds at most one vertex of
// an independent set, so a greedy clique cover of the candidates bounds
// the gain.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const ConfusabilityGraph& g) : n_(g.vertex_count()) {
    non_neighbors_.reserve(n_);
    neighbors_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      Bitset row(n_);
      row.set_all();
      row.subtract(g.neighbors(v));
      row.reset(v);
      non_neighbors_.push_back(std::move(row));
      neighbors_.push_back(g.neighbors(v));
    }
  }

  // Orders `candidates` into clique classes; bound[i] = number of classes
  // among order[0..i].
  void cover(const Bitset& candidates, std::vector<std::size_t>& order,
             std::vector<std::size_t>& bound) const {
    order.clear();
    bound.clear();
    Bitset left = candidates;
    std::size_t classes = 0;
    while (!left.none()) {
      ++classes;
      Bitset open = left;
      while (!open.none()) {
        const std::size_t v = open.first();
        left.reset(v);
        open.reset(v);
        open &= neighbors_[v];
        order.push_back(v);
        bound.push_back(classes);
      }
    }
  }

  void expand(Bitset candidates, std::size_t size, std::atomic<std::size_t>& best) const {
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    cover(candidates, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + bound[i] <= best.load(std::memory_order_relaxed)) return;
      const std::size_t v = order[i];
      Bitset next = candidates & non_neighbors_[v];
      if (next.none()) {
        raise(best, size + 1);
      } else {
        expand(std::move(next), size + 1, best);
      }
      candidates.reset(v);
    }
  }

  std::size_t solve(Exec exec) const {
    if (n_ == 0) return 0;
    std::atomic<std::size_t> best{1};
    Bitset all(n_);
    all.set_all();
    if (exec == Exec::serial) {
      expand(all, 0, best);
      return best.load();
    }
    // Root branch i explores order[i] together with candidates order[0..i-1],
    // exactly the subproblem the serial loop reaches at position i.
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    cover(all, order, bound);
    const long branches = static_cast<long>(order.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = branches - 1; i >= 0; --i) {
      if (bound[i] <= best.load(std::memory_order_relaxed)) continue;
      Bitset prefix(n_);
      for (long k = 0; k < i; ++k) prefix.set(order[k]);
      Bitset next = prefix & non_neighbors_[order[i]];
      if (next.none()) {
        raise(best, 1);
      } else {
        expand(std::move(next), 1, best);
      }
    }
    return best.load();
  }

 private:
  static void raise(std::atomic<std::size_t>& best, std::size_t value) {
    std::size_t current = best.load(std::memory_order_relaxed);
    while (value > current && !best.compare_exchange_weak(current, value)) {
    }
  }

  std::size_t n_;
  std::vector<Bitset> non_neighbors_;
  std::vector<Bitset> neighbors_;
};

}  // namespace

std::size_t independence_number(const ConfusabilityGraph& g, Exec exec, std::size_t limit) {
  if (g.vertex_count() > limit) {
    throw LimitExceeded("independence_number: " + std::to_string(g.vertex_count()) +
                        " vertices exceed the limit of " + std::to_string(limit));
  }
  return IndependentSetSearch(g).solve(exec);
}

std::size_t independence_number_bruteforce(const ConfusabilityGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kBruteForceAlphaLimit) {
    throw LimitExceeded("brute-force independence number is limited to 24 vertices");
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (g.has_edge(u, v)) adj[u] |= std::uint32_t{1} << v;
  // independent[mask] derived from mask without its lowest vertex.
  const std::uint32_t subsets = std::uint32_t{1} << n;
  std::vector<std::uint8_t> independent(subsets, 0);
  independent[0] = 1;
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & (mask - 1);
    if (independent[rest] && (adj[low] & rest) == 0) {
      independent[mask] = 1;
      best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
    }
  }
  return best;
}

CapacityResult zero_error_capacity_oneshot(const Channel& c, Exec exec, std::size_t limit) {
  const auto g = confusability_graph(c);
  CapacityResult result;
  result.alpha = independence_number(g, exec, limit);
  result.bits = std::log2(static_cast<double>(result.alpha));
  if (std::has_single_bit(result.alpha)) {
    result.exact_bits = static_cast<int>(std::countr_zero(result.alpha));
  }
  result.complete = g.is_complete();
  return result;
}

}  // namespace zerocap
