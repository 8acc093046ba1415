#include "zerocap/protocols.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "zerocap/sampling.hpp"

namespace zerocap {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

bool in_range(int v, int card) { return v >= 0 && v < card; }

void check_compatible(const Channel& c, const Behavior& box, const AssistedProtocol& p) {
  p.check();
  const auto& s = box.scenario();
  require(s.x_card == p.x_card && s.y_card == p.y_card && s.a_card == p.a_card &&
              s.b_card == p.b_card,
          "box scenario does not match the protocol");
  require(c.input_count() == p.channel_inputs && c.output_count() == p.channel_outputs,
          "channel shape does not match the protocol");
  if (c.mode() != box.mode()) throw ModeMismatch("channel and box use different numeric modes");
  const auto ns = is_no_signaling(box);
  require(ns.no_signaling, "the box is signaling (max violation " +
                               std::to_string(ns.max_violation) + ")");
}

// Positive-probability test used for reachability.
bool positive(const Scalar& v) { return v.is_positive(1e-12); }

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, double& as_double) {
  as_double = std::pow(static_cast<double>(base), static_cast<double>(exponent));
  std::uint64_t value = 1;
  for (std::uint64_t k = 0; k < exponent && as_double < 1.8e19; ++k) value *= base;
  return value;
}

// Digits of `index` in base `base`, most significant first.
void digits(std::uint64_t index, std::uint64_t base, std::vector<int>& out) {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = static_cast<int>(index % base);
    index /= base;
  }
}

}  // namespace

void AssistedProtocol::check() const {
  require(message_count >= 1, "protocol needs at least one message");
  require(x_card >= 1 && y_card >= 1 && a_card >= 1 && b_card >= 1, "box cardinalities must be positive");
  require(channel_inputs >= 1 && channel_outputs >= 1, "channel sizes must be positive");
  require(enc_box_input.size() == static_cast<std::size_t>(message_count),
          "enc_box_input needs one entry per message");
  require(enc_channel_input.size() == static_cast<std::size_t>(message_count) * a_card,
          "enc_channel_input needs one entry per (message, a)");
  require(dec_box_input.size() == channel_outputs, "dec_box_input needs one entry per output");
  require(dec_guess.size() == channel_outputs * (b_card + 1),
          "dec_guess needs b_card + 1 entries per output");
  require(guess_remap.size() >= static_cast<std::size_t>(message_count),
          "guess alphabet is smaller than the message set");
  for (int x : enc_box_input) require(in_range(x, x_card), "enc_box_input value out of range");
  for (int in : enc_channel_input) {
    require(in >= 0 && static_cast<std::size_t>(in) < channel_inputs,
            "enc_channel_input value out of range");
  }
  for (int y : dec_box_input) require(y == kSkip || in_range(y, y_card), "dec_box_input value out of range");
  for (int g : dec_guess) require(in_range(g, guess_alphabet()), "dec_guess value out of range");
  for (int k = 0; k < guess_alphabet(); ++k) {
    require(in_range(guess_remap[k], message_count), "guess_remap value out of range");
    if (k < message_count) require(guess_remap[k] == k, "guess_remap must fix the messages");
  }
}

void MessagePrior::check() const {
  require(!weights.empty(), "prior needs at least one message");
  const NumericMode mode = common_mode(weights);
  Scalar total = Scalar::zero(mode);
  for (const auto& w : weights) {
    require(w.sign() >= 0, "prior weights must be nonnegative");
    total += w;
  }
  if (mode == NumericMode::rational) {
    require(total == Scalar::one(mode), "prior weights must sum to 1");
  } else {
    require(std::abs(total.to_double() - 1.0) <= 1e-9, "prior weights must sum to 1");
  }
}

MessagePrior uniform_prior(int message_count, NumericMode mode) {
  require(message_count >= 1, "prior needs at least one message");
  const Scalar w = Scalar::rational(1, message_count).to_mode(mode);
  return MessagePrior{std::vector<Scalar>(message_count, w)};
}

AssistedProtocol make_theorem2_protocol(int m, std::function<int(int, int)> inverse) {
  require(m >= 2, "the N_m protocol needs m >= 2");
  AssistedProtocol p;
  p.message_count = 2;
  p.x_card = 2;
  p.y_card = 2;
  p.a_card = m;
  p.b_card = m;
  p.channel_inputs = 2 * static_cast<std::size_t>(m);
  p.channel_outputs = static_cast<std::size_t>(m + 1) * m;
  p.enc_box_input = {0, 1};
  for (int g = 0; g < 2; ++g)
    for (int a = 0; a < m; ++a) p.enc_channel_input.push_back(g * m + a);
  p.dec_box_input.assign(p.channel_outputs, kSkip);
  p.dec_guess.assign(p.channel_outputs * (m + 1), 0);
  for (int o1 = 0; o1 <= m; ++o1) {  // zero-based o1
    for (int o2 = 0; o2 < m; ++o2) {
      const std::size_t out = static_cast<std::size_t>(o1) * m + o2;
      int* guesses = &p.dec_guess[out * (m + 1)];
      if (o1 == 0) {
        guesses[m] = o2;
      } else if (o1 == 1) {
        p.dec_box_input[out] = 1;
        for (int b = 0; b < m; ++b) guesses[b] = (inverse(m, o2) + b) % m;
      } else {
        p.dec_box_input[out] = 0;
        for (int b = 0; b < m; ++b) guesses[b] = (o2 + inverse(m, pi_perm(m, o1 - 2, b))) % m;
      }
    }
  }
  p.guess_remap.resize(m);
  for (int g = 0; g < m; ++g) p.guess_remap[g] = g < 2 ? g : 0;
  return p;
}

AssistedProtocol make_theorem3_protocol(int m) {
  require(m >= 2, "the M_m protocol needs m >= 2");
  const int o1_count = m * (m - 1) + 1;
  AssistedProtocol p;
  p.message_count = m;
  p.x_card = m;
  p.y_card = m;
  p.a_card = 2;
  p.b_card = 2;
  p.channel_inputs = 2 * static_cast<std::size_t>(m);
  p.channel_outputs = static_cast<std::size_t>(o1_count) * m;
  for (int g = 0; g < m; ++g) {
    p.enc_box_input.push_back(g);
    p.enc_channel_input.push_back(g * 2);
    p.enc_channel_input.push_back(g * 2 + 1);
  }
  p.dec_box_input.assign(p.channel_outputs, kSkip);
  p.dec_guess.assign(p.channel_outputs * 3, 0);
  for (int o1 = 0; o1 < o1_count; ++o1) {
    for (int o2 = 0; o2 < m; ++o2) {
      const std::size_t out = static_cast<std::size_t>(o1) * m + o2;
      int* guesses = &p.dec_guess[out * 3];
      if (o1 == 0) {
        guesses[2] = o2;
        continue;
      }
      const int block = (o1 - 1) / (m - 1);
      const int shift = (o1 - 1) % (m - 1);
      p.dec_box_input[out] = block;
      for (int b = 0; b < 2; ++b) guesses[b] = (o2 + pi_hat(m, pi_perm(m, shift, b))) % m;
    }
  }
  p.guess_remap.resize(m);
  for (int g = 0; g < m; ++g) p.guess_remap[g] = g;
  return p;
}

AssistedProtocol tensor_protocols(const AssistedProtocol& first, const AssistedProtocol& second) {
  first.check();
  second.check();
  const int k1 = first.message_count, k2 = second.message_count;
  const int g1 = first.guess_alphabet(), g2 = second.guess_alphabet();

  // Extended guess (u, v) -> product index; genuine pairs first.
  std::vector<int> guess_index(static_cast<std::size_t>(g1) * g2, -1);
  std::vector<int> remap;
  for (int u = 0; u < k1; ++u)
    for (int v = 0; v < k2; ++v) {
      guess_index[u * g2 + v] = static_cast<int>(remap.size());
      remap.push_back(u * k2 + v);
    }
  for (int u = 0; u < g1; ++u)
    for (int v = 0; v < g2; ++v) {
      if (guess_index[u * g2 + v] >= 0) continue;
      guess_index[u * g2 + v] = static_cast<int>(remap.size());
      remap.push_back(first.guess_remap[u] * k2 + second.guess_remap[v]);
    }

  AssistedProtocol p;
  p.message_count = k1 * k2;
  p.x_card = first.x_card * second.x_card;
  p.y_card = first.y_card * second.y_card;
  p.a_card = first.a_card * second.a_card;
  p.b_card = first.b_card * second.b_card;
  p.channel_inputs = first.channel_inputs * second.channel_inputs;
  p.channel_outputs = first.channel_outputs * second.channel_outputs;
  p.guess_remap = std::move(remap);

  for (int g = 0; g < p.message_count; ++g) {
    const int u = g / k2, v = g % k2;
    p.enc_box_input.push_back(first.enc_box_input[u] * second.x_card + second.enc_box_input[v]);
  }
  p.enc_channel_input.resize(static_cast<std::size_t>(p.message_count) * p.a_card);
  for (int g = 0; g < p.message_count; ++g) {
    const int u = g / k2, v = g % k2;
    for (int a = 0; a < p.a_card; ++a) {
      const int a1 = a / second.a_card, a2 = a % second.a_card;
      p.enc_channel_input[g * p.a_card + a] =
          first.enc_channel_input[u * first.a_card + a1] * static_cast<int>(second.channel_inputs) +
          second.enc_channel_input[v * second.a_card + a2];
    }
  }
  p.dec_box_input.resize(p.channel_outputs);
  p.dec_guess.assign(p.channel_outputs * (p.b_card + 1), 0);
  for (std::size_t o1 = 0; o1 < first.channel_outputs; ++o1) {
    for (std::size_t o2 = 0; o2 < second.channel_outputs; ++o2) {
      const std::size_t out = o1 * second.channel_outputs + o2;
      const int y1 = first.dec_box_input[o1], y2 = second.dec_box_input[o2];
      const bool skip1 = y1 == kSkip, skip2 = y2 == kSkip;
      int* guesses = &p.dec_guess[out * (p.b_card + 1)];
      if (skip1 && skip2) {
        p.dec_box_input[out] = kSkip;
        guesses[p.b_card] = guess_index[first.guess(o1, kSkip) * g2 + second.guess(o2, kSkip)];
        continue;
      }
      p.dec_box_input[out] = (skip1 ? 0 : y1) * second.y_card + (skip2 ? 0 : y2);
      for (int b = 0; b < p.b_card; ++b) {
        const int b1 = b / second.b_card, b2 = b % second.b_card;
        const int u = first.guess(o1, skip1 ? kSkip : b1);
        const int v = second.guess(o2, skip2 ? kSkip : b2);
        guesses[b] = guess_index[u * g2 + v];
      }
    }
  }
  p.check();
  return p;
}

std::vector<Scalar> success_per_message(const Channel& c, const Behavior& box,
                                        const AssistedProtocol& p) {
  check_compatible(c, box, p);
  const NumericMode mode = box.mode();
  std::vector<Scalar> result;
  result.reserve(p.message_count);
  for (int g = 0; g < p.message_count; ++g) {
    const int x = p.enc_box_input[g];
    Scalar total = Scalar::zero(mode);
    for (int a = 0; a < p.a_card; ++a) {
      const std::size_t in = p.enc_channel_input[g * p.a_card + a];
      const Scalar p_a = marginal_alice(box, x, a, 0);
      if (p_a.is_zero()) continue;
      for (std::size_t out = 0; out < p.channel_outputs; ++out) {
        const Scalar& p_out = c(out, in);
        if (p_out.is_zero()) continue;
        const int y = p.dec_box_input[out];
        if (y == kSkip) {
          if (p.guess_remap[p.guess(out, kSkip)] == g) total += p_a * p_out;
          continue;
        }
        Scalar hit = Scalar::zero(mode);
        for (int b = 0; b < p.b_card; ++b) {
          if (p.guess_remap[p.guess(out, b)] == g) hit += box(x, y, a, b);
        }
        total += hit * p_out;
      }
    }
    result.push_back(std::move(total));
  }
  return result;
}

Scalar exact_success(const Channel& c, const Behavior& box, const AssistedProtocol& p,
                     const MessagePrior& prior) {
  prior.check();
  require(prior.size() == p.message_count, "prior size does not match the message count");
  if (common_mode(prior.weights) != box.mode()) {
    throw ModeMismatch("prior and box use different numeric modes");
  }
  const auto per_message = success_per_message(c, box, p);
  Scalar total = Scalar::zero(box.mode());
  for (int g = 0; g < p.message_count; ++g) total += prior.weights[g] * per_message[g];
  return total;
}

std::vector<Branch> reachable_branches(const Channel& c, const Behavior& box,
                                       const AssistedProtocol& p) {
  check_compatible(c, box, p);
  std::vector<Branch> branches;
  for (int g = 0; g < p.message_count; ++g) {
    const int x = p.enc_box_input[g];
    for (int a = 0; a < p.a_card; ++a) {
      if (!positive(marginal_alice(box, x, a, 0))) continue;
      const std::size_t in = p.enc_channel_input[g * p.a_card + a];
      for (std::size_t out = 0; out < p.channel_outputs; ++out) {
        if (!positive(c(out, in))) continue;
        const int y = p.dec_box_input[out];
        if (y == kSkip) {
          branches.push_back({g, a, out, kSkip, p.guess_remap[p.guess(out, kSkip)]});
          continue;
        }
        for (int b = 0; b < p.b_card; ++b) {
          if (positive(box(x, y, a, b))) {
            branches.push_back({g, a, out, b, p.guess_remap[p.guess(out, b)]});
          }
        }
      }
    }
  }
  return branches;
}

std::vector<Branch> zero_error_violations(const Channel& c, const Behavior& box,
                                          const AssistedProtocol& p) {
  auto branches = reachable_branches(c, box, p);
  std::erase_if(branches, [](const Branch& b) { return b.guess == b.message; });
  return branches;
}

bool is_zero_error(const Channel& c, const Behavior& box, const AssistedProtocol& p) {
  if (c.mode() != NumericMode::rational || box.mode() != NumericMode::rational) {
    throw std::invalid_argument("zero-error decisions require rational mode");
  }
  const Scalar one = Scalar::one(NumericMode::rational);
  for (const auto& s : success_per_message(c, box, p)) {
    if (s != one) return false;
  }
  return true;
}

namespace {

struct Candidate {
  std::optional<Scalar> value;
  std::uint64_t index = 0;

  void offer(const Scalar& v, std::uint64_t i) {
    if (!value || *value < v || (*value == v && i < index)) {
      value = v;
      index = i;
    }
  }
};

}  // namespace

UnassistedResult best_unassisted_success(const Channel& c, int message_count,
                                         const MessagePrior& prior, Exec exec, double limit) {
  prior.check();
  require(message_count >= 1, "need at least one message");
  require(prior.size() == message_count, "prior size does not match the message count");
  if (common_mode(prior.weights) != c.mode()) {
    throw ModeMismatch("prior and channel use different numeric modes");
  }
  const std::size_t n_in = c.input_count();
  const std::size_t n_out = c.output_count();
  double total_double = 0.0;
  const std::uint64_t total = checked_power(n_in, message_count, total_double);
  if (total_double * static_cast<double>(n_out) * message_count > limit) {
    throw LimitExceeded("best_unassisted_success: " + std::to_string(total_double) +
                        " encoders exceed the work limit");
  }

  // weighted[g][in][out] = prior(g) p(out|in)
  std::vector<Scalar> weighted(static_cast<std::size_t>(message_count) * n_in * n_out);
  for (int g = 0; g < message_count; ++g)
    for (std::size_t in = 0; in < n_in; ++in)
      for (std::size_t out = 0; out < n_out; ++out)
        weighted[(g * n_in + in) * n_out + out] = prior.weights[g] * c(out, in);

  auto score = [&](std::uint64_t index) {
    std::vector<int> enc(message_count);
    digits(index, n_in, enc);
    Scalar sum = Scalar::zero(c.mode());
    for (std::size_t out = 0; out < n_out; ++out) {
      const Scalar* best = &weighted[enc[0] * n_out + out];
      for (int g = 1; g < message_count; ++g) {
        const Scalar& v = weighted[(g * n_in + enc[g]) * n_out + out];
        if (*best < v) best = &v;
      }
      sum += *best;
    }
    return sum;
  };

  Candidate overall;
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < total; ++i) overall.offer(score(i), i);
  } else {
    const long long count = static_cast<long long>(total);
#pragma omp parallel
    {
      Candidate local;
#pragma omp for schedule(static)
      for (long long i = 0; i < count; ++i) local.offer(score(i), static_cast<std::uint64_t>(i));
#pragma omp critical(zerocap_best_unassisted)
      if (local.value) overall.offer(*local.value, local.index);
    }
  }

  UnassistedResult result;
  result.success = *overall.value;
  result.encoders_examined = total;
  std::vector<int> enc(message_count);
  digits(overall.index, n_in, enc);
  result.encoder.assign(enc.begin(), enc.end());
  result.decoder.resize(n_out);
  for (std::size_t out = 0; out < n_out; ++out) {
    int arg = 0;
    for (int g = 1; g < message_count; ++g) {
      if (weighted[(arg * n_in + enc[arg]) * n_out + out] <
          weighted[(g * n_in + enc[g]) * n_out + out]) {
        arg = g;
      }
    }
    result.decoder[out] = arg;
  }
  return result;
}

namespace {

// Support tables of a rational box and channel, and the decoder for one
// encoder candidate.
class AssistedSearch {
 public:
  AssistedSearch(const Channel& c, const Behavior& box, int messages)
      : c_(c), s_(box.scenario()), k_(messages) {
    alice_.resize(static_cast<std::size_t>(s_.x_card) * s_.a_card);
    for (int x = 0; x < s_.x_card; ++x)
      for (int a = 0; a < s_.a_card; ++a)
        alice_[x * s_.a_card + a] = positive(marginal_alice(box, x, a, 0));
    joint_.resize(s_.size());
    for (std::size_t i = 0; i < s_.size(); ++i) joint_[i] = positive(box.table()[i]);
    channel_.resize(c.input_count() * c.output_count());
    for (std::size_t in = 0; in < c.input_count(); ++in)
      for (std::size_t out = 0; out < c.output_count(); ++out)
        channel_[in * c.output_count() + out] = positive(c(out, in));
    x_count_ = 1;
    for (int g = 0; g < k_; ++g) x_count_ *= s_.x_card;
  }

  std::uint64_t channel_maps(double& as_double) const {
    return checked_power(c_.input_count(), static_cast<std::uint64_t>(k_) * s_.a_card, as_double);
  }

  // Fills `p` (decoder included) when encoder `index` admits a zero-error
  // decoder.
  bool solve(std::uint64_t index, std::uint64_t channel_count, AssistedProtocol* p) const {
    std::vector<int> xs(k_);
    std::vector<int> ins(static_cast<std::size_t>(k_) * s_.a_card);
    digits(index / channel_count, s_.x_card, xs);
    digits(index % channel_count, c_.input_count(), ins);
    const std::size_t n_out = c_.output_count();
    std::vector<std::pair<int, int>> reach;  // (g, a)
    std::vector<int> bmap(s_.b_card);
    if (p) {
      p->enc_box_input = xs;
      p->enc_channel_input = ins;
    }
    for (std::size_t out = 0; out < n_out; ++out) {
      reach.clear();
      for (int g = 0; g < k_; ++g)
        for (int a = 0; a < s_.a_card; ++a)
          if (alice_[xs[g] * s_.a_card + a] && channel_[ins[g * s_.a_card + a] * n_out + out])
            reach.emplace_back(g, a);
      int* guesses = p ? &p->dec_guess[out * (s_.b_card + 1)] : nullptr;
      if (reach.empty()) continue;
      const bool single = std::all_of(reach.begin(), reach.end(),
                                      [&](const auto& r) { return r.first == reach[0].first; });
      if (single) {
        if (p) {
          p->dec_box_input[out] = kSkip;
          guesses[s_.b_card] = reach[0].first;
        }
        continue;
      }
      bool decoded = false;
      for (int y = 0; y < s_.y_card && !decoded; ++y) {
        std::fill(bmap.begin(), bmap.end(), -1);
        decoded = true;
        for (const auto& [g, a] : reach) {
          for (int b = 0; b < s_.b_card; ++b) {
            if (!joint_[s_.index(xs[g], y, a, b)]) continue;
            if (bmap[b] == -1) {
              bmap[b] = g;
            } else if (bmap[b] != g) {
              decoded = false;
              break;
            }
          }
          if (!decoded) break;
        }
        if (decoded && p) {
          p->dec_box_input[out] = y;
          for (int b = 0; b < s_.b_card; ++b) guesses[b] = std::max(bmap[b], 0);
        }
      }
      if (!decoded) return false;
    }
    return true;
  }

  std::uint64_t x_count() const { return x_count_; }

 private:
  const Channel& c_;
  Scenario s_;
  int k_;
  std::uint64_t x_count_ = 1;
  std::vector<char> alice_;
  std::vector<char> joint_;
  std::vector<char> channel_;
};

}  // namespace

SearchResult exhaustive_assisted_search(const Channel& c, const Behavior& box, int message_count,
                                        SearchLimits limits, Exec exec) {
  require(message_count >= 1, "need at least one message");
  if (c.mode() != NumericMode::rational || box.mode() != NumericMode::rational) {
    throw std::invalid_argument("exhaustive_assisted_search requires rational mode");
  }
  const auto ns = is_no_signaling(box);
  require(ns.no_signaling, "the box is signaling");
  const auto& s = box.scenario();

  AssistedSearch search(c, box, message_count);
  double channel_double = 0.0;
  const std::uint64_t channel_count = search.channel_maps(channel_double);
  const double total_double = channel_double * std::pow(double(s.x_card), double(message_count));
  const double work = total_double * static_cast<double>(c.output_count()) * (s.y_card + 1) *
                      message_count * s.a_card * s.b_card;
  if (work > limits.max_work || total_double > 1.8e19) {
    throw LimitExceeded("exhaustive_assisted_search: estimated " + std::to_string(work) +
                        " branch evaluations exceed the limit of " +
                        std::to_string(limits.max_work));
  }
  const std::uint64_t total = search.x_count() * channel_count;

  std::uint64_t first = total;
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < total; ++i) {
      if (search.solve(i, channel_count, nullptr)) {
        first = i;
        break;
      }
    }
  } else {
    std::atomic<std::uint64_t> best{total};
    const long long count = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 256)
    for (long long i = 0; i < count; ++i) {
      const auto index = static_cast<std::uint64_t>(i);
      if (index >= best.load(std::memory_order_relaxed)) continue;
      if (!search.solve(index, channel_count, nullptr)) continue;
      std::uint64_t current = best.load();
      while (index < current && !best.compare_exchange_weak(current, index)) {
      }
    }
    first = best.load();
  }

  SearchResult result;
  result.encoders_total = total;
  result.encoders_examined = first == total ? total : first + 1;
  if (first == total) return result;

  AssistedProtocol p;
  p.message_count = message_count;
  p.x_card = s.x_card;
  p.y_card = s.y_card;
  p.a_card = s.a_card;
  p.b_card = s.b_card;
  p.channel_inputs = c.input_count();
  p.channel_outputs = c.output_count();
  p.dec_box_input.assign(c.output_count(), kSkip);
  p.dec_guess.assign(c.output_count() * (s.b_card + 1), 0);
  p.guess_remap.resize(message_count);
  for (int g = 0; g < message_count; ++g) p.guess_remap[g] = g;
  search.solve(first, channel_count, &p);
  p.check();
  result.protocol = std::move(p);
  return result;
}

MonteCarloResult monte_carlo_success(const Channel& c, const Behavior& box,
                                     const AssistedProtocol& p, const MessagePrior& prior,
                                     std::uint64_t trials, std::uint64_t seed, Exec exec) {
  if (trials == 0) throw std::invalid_argument("monte_carlo_success needs at least one trial");
  check_compatible(c, box, p);
  prior.check();
  require(prior.size() == p.message_count, "prior size does not match the message count");
  const auto& s = box.scenario();

  const DiscreteSampler message_sampler(prior.weights);
  std::vector<DiscreteSampler> alice(s.x_card);
  for (int x = 0; x < s.x_card; ++x) {
    std::vector<Scalar> w;
    for (int a = 0; a < s.a_card; ++a) w.push_back(marginal_alice(box, x, a, 0));
    alice[x] = DiscreteSampler(w);
  }
  std::vector<DiscreteSampler> channel(c.input_count());
  for (std::size_t in = 0; in < c.input_count(); ++in) channel[in] = DiscreteSampler(c.column(in));
  // bob[(x * y_card + y) * a_card + a] samples b from p(a, . | x, y).
  std::vector<std::optional<DiscreteSampler>> bob(static_cast<std::size_t>(s.x_card) * s.y_card *
                                                  s.a_card);
  for (int x = 0; x < s.x_card; ++x)
    for (int y = 0; y < s.y_card; ++y)
      for (int a = 0; a < s.a_card; ++a) {
        if (!marginal_alice(box, x, a, y).is_positive(0.0)) continue;
        bob[(x * s.y_card + y) * s.a_card + a].emplace(
            box.table().subspan(s.index(x, y, a, 0), s.b_card));
      }

  auto run_block = [&](std::uint64_t block) {
    auto engine = block_engine(seed, block);
    const std::uint64_t begin = block * kMonteCarloBlock;
    const std::uint64_t end = std::min(trials, begin + kMonteCarloBlock);
    std::uint64_t hits = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      const int g = static_cast<int>(message_sampler(engine));
      const int x = p.enc_box_input[g];
      const int a = static_cast<int>(alice[x](engine));
      const std::size_t out = channel[p.enc_channel_input[g * p.a_card + a]](engine);
      const int y = p.dec_box_input[out];
      int guess = 0;
      if (y == kSkip) {
        guess = p.guess(out, kSkip);
      } else {
        const auto& sampler = bob[(x * s.y_card + y) * s.a_card + a];
        if (!sampler) throw std::logic_error("sampled an outcome of zero probability");
        guess = p.guess(out, static_cast<int>((*sampler)(engine)));
      }
      if (p.guess_remap[guess] == g) ++hits;
    }
    return hits;
  };

  const std::uint64_t blocks = (trials + kMonteCarloBlock - 1) / kMonteCarloBlock;
  std::uint64_t successes = 0;
  if (exec == Exec::serial) {
    for (std::uint64_t k = 0; k < blocks; ++k) successes += run_block(k);
  } else {
    const long long count = static_cast<long long>(blocks);
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : successes)
    for (long long k = 0; k < count; ++k) successes += run_block(static_cast<std::uint64_t>(k));
  }

  MonteCarloResult result;
  result.trials = trials;
  result.successes = successes;
  result.estimate = static_cast<double>(successes) / static_cast<double>(trials);
  result.std_error = std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(trials));
  return result;
}

}  // namespace zerocap
