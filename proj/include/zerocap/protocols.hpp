#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zerocap/behaviors.hpp"
#include "zerocap/channels.hpp"
#include "zerocap/parallel.hpp"

namespace zerocap {

/// Decoder entry meaning "do not use the box for this output".
inline constexpr int kSkip = -1;

/// One-shot assisted code. Alice maps message g to box input x and, after
/// seeing her box output a, to a channel input. Bob maps the channel output
/// either to a box input y or to kSkip, then guesses from (output, b) in an
/// extended alphabet that guess_remap folds back onto the messages.
struct AssistedProtocol {
  int message_count = 0;
  int x_card = 1;
  int y_card = 1;
  int a_card = 1;
  int b_card = 1;
  std::size_t channel_inputs = 0;
  std::size_t channel_outputs = 0;

  std::vector<int> enc_box_input;      // [g]
  std::vector<int> enc_channel_input;  // [g * a_card + a]
  std::vector<int> dec_box_input;      // [out], y or kSkip
  /// [out * (b_card + 1) + b]; slot b_card holds the guess of a skipped row.
  std::vector<int> dec_guess;
  std::vector<int> guess_remap;  // [extended guess] -> message

  int guess_alphabet() const { return static_cast<int>(guess_remap.size()); }
  int guess(std::size_t out, int b) const {
    return dec_guess[out * (b_card + 1) + (b == kSkip ? b_card : b)];
  }
  /// Total maps, values in range, remap identity on the messages.
  void check() const;

  friend bool operator==(const AssistedProtocol&, const AssistedProtocol&) = default;
};

/// Distribution over messages; defaults to uniform.
struct MessagePrior {
  std::vector<Scalar> weights;
  int size() const { return static_cast<int>(weights.size()); }
  void check() const;
};

MessagePrior uniform_prior(int message_count, NumericMode mode = NumericMode::rational);

/// One bit over N_m with P_m. x = g, channel input (g, a). Bob skips the
/// box on o1 = 1 and guesses o2; on o1 = 2 he uses y = 1 and guesses
/// inverse(o2) + b; on o1 = l >= 3 he uses y = 0 and guesses
/// o2 + inverse(pi_perm(m, l - 3, b)). Guesses >= 2 are remapped to 0.
/// `inverse` defaults to pi_hat; other maps exist for fault injection.
AssistedProtocol make_theorem2_protocol(int m, std::function<int(int, int)> inverse = pi_hat);

/// log m bits over M_m with the R~_m box. x = g, channel input (g, a);
/// o1 = 1 is skipped, o1 in block j uses y = j and guesses
/// o2 + pi_hat(pi_perm(m, shift, b)).
AssistedProtocol make_theorem3_protocol(int m);

/// Componentwise product for tensor_channels / tensor_behaviors. A component
/// that skips the box is run with y = 0 and ignores its b; the product
/// skips only when both do. Extended guesses are ordered so that the K1*K2
/// genuine message pairs come first.
AssistedProtocol tensor_protocols(const AssistedProtocol& first, const AssistedProtocol& second);

/// sum_g prior(g) sum_a sum_out p(out | in(g,a)) *
///   [skip: p(a|x) [guess = g];  else: sum_b p(a,b|x,y) [guess = g]]
/// using the joint box table, which is valid because the box must be
/// no-signaling (checked). All inputs must share one numeric mode.
Scalar exact_success(const Channel& c, const Behavior& box, const AssistedProtocol& p,
                     const MessagePrior& prior);

/// Success conditioned on each message.
std::vector<Scalar> success_per_message(const Channel& c, const Behavior& box,
                                        const AssistedProtocol& p);

/// A positive-probability path (g, a, out, b) and Bob's remapped guess.
/// b is kSkip on skipped rows.
struct Branch {
  int message = 0;
  int a = 0;
  std::size_t out = 0;
  int b = kSkip;
  int guess = 0;
};

/// Every reachable path of the protocol.
std::vector<Branch> reachable_branches(const Channel& c, const Behavior& box,
                                       const AssistedProtocol& p);

/// Reachable paths whose remapped guess differs from the message.
std::vector<Branch> zero_error_violations(const Channel& c, const Behavior& box,
                                          const AssistedProtocol& p);

/// Per-message success is exactly 1 for every message. Rational mode only
/// (std::invalid_argument otherwise).
bool is_zero_error(const Channel& c, const Behavior& box, const AssistedProtocol& p);

struct UnassistedResult {
  Scalar success;
  std::vector<std::size_t> encoder;  // [g] -> channel input
  std::vector<int> decoder;          // [out] -> message (MAP, smallest on ties)
  std::uint64_t encoders_examined = 0;
};

/// Best deterministic code without assistance: all input_count^K encoders,
/// each scored with its MAP decoder. Ties between encoders go to the
/// smallest encoder index (g = 0 most significant). Throws LimitExceeded
/// when encoders * outputs * K exceeds `limit`.
UnassistedResult best_unassisted_success(const Channel& c, int message_count,
                                         const MessagePrior& prior, Exec exec = Exec::parallel,
                                         double limit = 1e9);

struct SearchLimits {
  double max_work = 1e9;
};

struct SearchResult {
  std::optional<AssistedProtocol> protocol;
  /// Canonical count: index of the returned encoder plus one, or all of them.
  std::uint64_t encoders_examined = 0;
  std::uint64_t encoders_total = 0;
  bool found() const { return protocol.has_value(); }
};

/// Exhaustive search for a zero-error deterministic assisted code over all
/// encoders (x map and channel-input map). For a fixed encoder the decoder
/// splits over outputs: an output is decodable iff skipping, or some y,
/// leaves every reachable b pointing at a single message. Rational mode.
/// The first zero-error encoder in canonical order is returned regardless
/// of thread count.
SearchResult exhaustive_assisted_search(const Channel& c, const Behavior& box, int message_count,
                                        SearchLimits limits = {}, Exec exec = Exec::parallel);

struct MonteCarloResult {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
};

inline constexpr std::uint64_t kMonteCarloBlock = 4096;

/// Simulates the protocol in its physical order (g, a, out, y, b). Trials
/// are split into blocks of kMonteCarloBlock, block k drawing from
/// block_engine(seed, k), so serial and parallel runs agree exactly.
MonteCarloResult monte_carlo_success(const Channel& c, const Behavior& box,
                                     const AssistedProtocol& p, const MessagePrior& prior,
                                     std::uint64_t trials, std::uint64_t seed,
                                     Exec exec = Exec::parallel);

}  // namespace zerocap
