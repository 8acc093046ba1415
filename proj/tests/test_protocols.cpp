#include "doctest.h"

#include <array>
#include <cmath>
#include <numbers>

#include "zerocap/behaviors.hpp"
#include "zerocap/channels.hpp"
#include "zerocap/protocols.hpp"
#include "zerocap/quantum.hpp"

using namespace zerocap;

namespace {

Scalar q(long n, long d = 1) { return Scalar::rational(n, d); }

std::size_t out_idx(const Channel& c, int o1, int o2) {
  const std::array<int, 2> t{o1, o2};
  return c.output_space().from_label(t);
}

// Success computed in the physical order with explicit conditioning:
// p(a|x) * p(out|in) * p(b|a,x,y), dividing by Alice's marginal.
Scalar conditional_success(const Channel& c, const Behavior& box, const AssistedProtocol& p,
                           const MessagePrior& prior) {
  const NumericMode mode = box.mode();
  Scalar total = Scalar::zero(mode);
  for (int g = 0; g < p.message_count; ++g) {
    const int x = p.enc_box_input[g];
    for (int a = 0; a < p.a_card; ++a) {
      Scalar pa = Scalar::zero(mode);
      for (int b = 0; b < p.b_card; ++b) pa += box(x, 0, a, b);
      if (pa.is_zero()) continue;
      const std::size_t in = p.enc_channel_input[g * p.a_card + a];
      for (std::size_t out = 0; out < c.output_count(); ++out) {
        const Scalar& pc = c(out, in);
        if (pc.is_zero()) continue;
        const int y = p.dec_box_input[out];
        if (y == kSkip) {
          if (p.guess_remap[p.guess(out, kSkip)] == g) total += prior.weights[g] * pa * pc;
          continue;
        }
        Scalar pay = Scalar::zero(mode);
        for (int b = 0; b < p.b_card; ++b) pay += box(x, y, a, b);
        for (int b = 0; b < p.b_card; ++b) {
          if (p.guess_remap[p.guess(out, b)] != g) continue;
          total += prior.weights[g] * pa * pc * (box(x, y, a, b) / pay);
        }
      }
    }
  }
  return total;
}

double cglmp_closed_form() {
  using std::numbers::pi;
  auto c2 = [](double t) { return 1.0 / (std::sin(t) * std::sin(t)); };
  return 0.25 * (1 + c2(pi / 4) / 36 + c2(5 * pi / 12) / 18 + c2(pi / 12) / 6);
}

}  // namespace

TEST_CASE("theorem-2 protocol shape") {
  const AssistedProtocol p = make_theorem2_protocol(3);
  CHECK_NOTHROW(p.check());
  CHECK(p.message_count == 2);
  CHECK(p.guess_alphabet() == 3);
  CHECK(p.guess_remap == std::vector<int>{0, 1, 0});
  CHECK(p.enc_box_input == std::vector<int>{0, 1});
  CHECK_THROWS_AS(make_theorem2_protocol(1), std::invalid_argument);
  CHECK_THROWS_AS(make_theorem3_protocol(1), std::invalid_argument);
}

TEST_CASE("theorem-2 single traces for m = 3") {
  const Channel n3 = make_Nm(3);
  const AssistedProtocol p = make_theorem2_protocol(3);
  // gamma = 1, a = 2, o1 = 3: o2 = 0, y = 0, b = 2, guess 1.
  const std::size_t out = out_idx(n3, 3, 0);
  CHECK(p.dec_box_input[out] == 0);
  CHECK(p.guess(out, 2) == 1);
  // o1 = 1 skips the box and reads o2.
  for (int o2 = 0; o2 < 2; ++o2) {
    const std::size_t o = out_idx(n3, 1, o2);
    CHECK(p.dec_box_input[o] == kSkip);
    CHECK(p.guess(o, kSkip) == o2);
  }
  bool saw = false;
  for (const Branch& br : reachable_branches(n3, make_extremal_box(3, 3), p)) {
    if (br.message == 1 && br.a == 2 && br.out == out) {
      saw = true;
      CHECK(br.b == 2);
      CHECK(br.guess == 1);
    }
  }
  CHECK(saw);
}

TEST_CASE("theorem-3 single trace for m = 3") {
  const Channel m3 = make_Mm(3);
  const AssistedProtocol p = make_theorem3_protocol(3);
  CHECK_NOTHROW(p.check());
  // gamma = 2, a = 1, o1 = 4: block 1, o2 = 0, y = 1, b = 1, guess 2.
  const std::size_t out = out_idx(m3, 4, 0);
  CHECK(p.dec_box_input[out] == 1);
  CHECK(p.guess(out, 1) == 2);
  CHECK(m3(out, 2 * 2 + 1) == q(1, 7));
  CHECK(p.dec_box_input[out_idx(m3, 1, 2)] == kSkip);
  CHECK(p.guess(out_idx(m3, 1, 2), kSkip) == 2);
}

TEST_CASE("theorem-2 protocols are zero-error at every branch, m = 2..6") {
  for (int m = 2; m <= 6; ++m) {
    const Channel c = make_Nm(m);
    const Behavior box = make_extremal_box(m, m);
    const AssistedProtocol p = make_theorem2_protocol(m);
    CHECK(zero_error_violations(c, box, p).empty());
    CHECK(is_zero_error(c, box, p));
    CHECK(exact_success(c, box, p, uniform_prior(2)) == q(1));
    CHECK(conditional_success(c, box, p, uniform_prior(2)) == q(1));
    for (const auto& s : success_per_message(c, box, p)) CHECK(s == q(1));
  }
}

TEST_CASE("theorem-3 protocols are zero-error, m = 2..5") {
  for (int m = 2; m <= 5; ++m) {
    const Channel c = make_Mm(m);
    const Behavior box = make_rtilde_box(m);
    const AssistedProtocol p = make_theorem3_protocol(m);
    CHECK(is_zero_error(c, box, p));
    CHECK(exact_success(c, box, p, uniform_prior(m)) == q(1));
    CHECK(conditional_success(c, box, p, uniform_prior(m)) == q(1));
  }
}

TEST_CASE("corrupting the decoder breaks zero error") {
  const Channel n3 = make_Nm(3);
  const Behavior p3 = make_extremal_box(3, 3);
  AssistedProtocol p = make_theorem2_protocol(3);
  for (int& y : p.dec_box_input)
    if (y != kSkip) y = 1 - y;
  CHECK_FALSE(is_zero_error(n3, p3, p));
  CHECK_FALSE(zero_error_violations(n3, p3, p).empty());
  CHECK(exact_success(n3, p3, p, uniform_prior(2)) < q(1));

  const AssistedProtocol faulty = make_theorem2_protocol(3, [](int m, int u) { return (m - u + 1) % m; });
  CHECK_FALSE(is_zero_error(n3, p3, faulty));
}

TEST_CASE("exact_success agrees with the conditional-probability oracle") {
  const Channel n3 = make_Nm(3);
  const AssistedProtocol p = make_theorem2_protocol(3);
  const Behavior u = make_uniform_behavior({2, 2, 3, 3});
  CHECK(exact_success(n3, u, p, uniform_prior(2)) == conditional_success(n3, u, p, uniform_prior(2)));
  const Behavior mixed = mix_behaviors(make_extremal_box(3, 3), q(2, 3), make_extremal_box(3, 2));
  CHECK(exact_success(n3, mixed, p, uniform_prior(2)) ==
        conditional_success(n3, mixed, p, uniform_prior(2)));
  const Channel m3 = make_Mm(3);
  const Behavior tab = make_i3322_table();
  const AssistedProtocol t3 = make_theorem3_protocol(3);
  CHECK(exact_success(m3, tab, t3, uniform_prior(3)) == q(6, 7));
  CHECK(conditional_success(m3, tab, t3, uniform_prior(3)) == q(6, 7));
}

TEST_CASE("CGLMP assistance on N_3") {
  const Channel n3 = convert(make_Nm(3), NumericMode::floating);
  const Behavior box = make_cglmp_behavior();
  const AssistedProtocol p = make_theorem2_protocol(3);
  const MessagePrior prior = uniform_prior(2, NumericMode::floating);
  const double s = exact_success(n3, box, p, prior).to_double();
  CHECK(std::abs(s - cglmp_closed_form()) < 1e-9);
  CHECK(std::abs(conditional_success(n3, box, p, prior).to_double() - s) < 1e-12);
  CHECK(s > 7.0 / 8.0);
  CHECK_THROWS_AS(is_zero_error(n3, box, p), std::invalid_argument);
  CHECK_THROWS_AS(exact_success(make_Nm(3), box, p, prior), ModeMismatch);
}

TEST_CASE("unassisted optimum of N_3 equals a full encoder/decoder brute force") {
  const Channel n3 = make_Nm(3);
  const auto r = best_unassisted_success(n3, 2, uniform_prior(2));
  CHECK(r.success == q(7, 8));
  CHECK(r.encoders_examined == 36);
  Scalar best = q(0);
  for (std::size_t e0 = 0; e0 < 6; ++e0)
    for (std::size_t e1 = 0; e1 < 6; ++e1)
      for (unsigned dec = 0; dec < (1u << 12); ++dec) {
        Scalar s = q(0);
        for (std::size_t o = 0; o < 12; ++o) {
          const int g = (dec >> o) & 1u;
          s += q(1, 2) * n3(o, g == 0 ? e0 : e1);
        }
        if (s > best) best = s;
      }
  CHECK(best == q(7, 8));
}

TEST_CASE("unassisted optima of M_3 and identity channels") {
  const auto r = best_unassisted_success(make_Mm(3), 3, uniform_prior(3));
  CHECK(r.success == q(17, 21));
  CHECK(best_unassisted_success(make_identity_channel(4), 4, uniform_prior(4)).success == q(1));
  CHECK(best_unassisted_success(make_Mm(3), 3, uniform_prior(3), Exec::serial).encoder == r.encoder);
  CHECK_THROWS_AS(best_unassisted_success(make_Mm(4), 6, uniform_prior(6), Exec::parallel, 1e4),
                  LimitExceeded);
}

TEST_CASE("local deterministic boxes do not beat the unassisted optimum on N_3") {
  const Channel n3 = make_Nm(3);
  const AssistedProtocol p = make_theorem2_protocol(3);
  int pairs = 0;
  for (int fa = 0; fa < 9; ++fa)
    for (int fb = 0; fb < 9; ++fb) {
      const Behavior d = make_local_deterministic({fa % 3, fa / 3}, 3, {fb % 3, fb / 3}, 3);
      CHECK(exact_success(n3, d, p, uniform_prior(2)) <= q(7, 8));
      ++pairs;
    }
  CHECK(pairs == 81);
}

TEST_CASE("exact_success is affine in the box and in the prior") {
  const Channel n3 = make_Nm(3);
  const AssistedProtocol p = make_theorem2_protocol(3);
  const Behavior p3 = make_extremal_box(3, 3);
  const Behavior u = make_uniform_behavior({2, 2, 3, 3});
  const Scalar s1 = exact_success(n3, p3, p, uniform_prior(2));
  const Scalar s0 = exact_success(n3, u, p, uniform_prior(2));
  for (const Scalar w : {q(0), q(1, 2), q(1)}) {
    CHECK(exact_success(n3, mix_behaviors(p3, w, u), p, uniform_prior(2)) ==
          w * s1 + (q(1) - w) * s0);
  }
  const auto per = success_per_message(n3, u, p);
  const MessagePrior skew{{q(1, 5), q(4, 5)}};
  CHECK(exact_success(n3, u, p, skew) == q(1, 5) * per[0] + q(4, 5) * per[1]);
  CHECK_THROWS(exact_success(n3, u, p, MessagePrior{{q(1, 2), q(1, 3)}}));
  CHECK_THROWS(exact_success(n3, u, p, uniform_prior(3)));
}

TEST_CASE("tensor products of protocols") {
  const AssistedProtocol t2 = make_theorem2_protocol(2);
  const AssistedProtocol tt = tensor_protocols(t2, t2);
  CHECK_NOTHROW(tt.check());
  CHECK(tt.message_count == 4);
  const Channel nn = tensor_channels(make_Nm(2), make_Nm(2));
  const Behavior pp = tensor_behaviors(make_extremal_box(2, 2), make_extremal_box(2, 2));
  CHECK(is_zero_error(nn, pp, tt));
  CHECK(exact_success(nn, pp, tt, uniform_prior(4)) == q(1));

  const AssistedProtocol t32 = tensor_protocols(make_theorem2_protocol(3), t2);
  const Channel n3n2 = tensor_channels(make_Nm(3), make_Nm(2));
  const Behavior p3p2 = tensor_behaviors(make_extremal_box(3, 3), make_extremal_box(2, 2));
  CHECK(is_zero_error(n3n2, p3p2, t32));

  // With a weaker box the product success factorizes.
  const Behavior u2 = make_uniform_behavior({2, 2, 2, 2});
  const Scalar single = exact_success(make_Nm(2), u2, t2, uniform_prior(2));
  const Behavior uu = tensor_behaviors(u2, u2);
  const Scalar prod = exact_success(nn, uu, tt, uniform_prior(4));
  CHECK(prod == single * single);
  CHECK(conditional_success(nn, uu, tt, uniform_prior(4)) == prod);
}

TEST_CASE("exhaustive assisted search") {
  const Channel n2 = make_Nm(2);
  const auto found = exhaustive_assisted_search(n2, make_extremal_box(2, 2), 2);
  REQUIRE(found.found());
  CHECK(is_zero_error(n2, make_extremal_box(2, 2), *found.protocol));
  CHECK(exact_success(n2, make_extremal_box(2, 2), *found.protocol, uniform_prior(2)) == q(1));

  const auto none = exhaustive_assisted_search(n2, make_trivial_box(), 2);
  CHECK_FALSE(none.found());
  CHECK(none.encoders_examined == none.encoders_total);

  const auto id = exhaustive_assisted_search(make_identity_channel(2), make_trivial_box(), 2);
  CHECK(id.found());

  const auto serial =
      exhaustive_assisted_search(n2, make_extremal_box(2, 2), 2, {}, Exec::serial);
  CHECK(serial.protocol == found.protocol);
  CHECK(serial.encoders_examined == found.encoders_examined);

  CHECK_THROWS_AS(exhaustive_assisted_search(n2, make_extremal_box(2, 2), 2, {10.0}),
                  LimitExceeded);
}

TEST_CASE("Monte Carlo estimates") {
  const Channel n3 = make_Nm(3);
  const Behavior p3 = make_extremal_box(3, 3);
  const AssistedProtocol p = make_theorem2_protocol(3);
  const auto perfect = monte_carlo_success(n3, p3, p, uniform_prior(2), 100000, 7);
  CHECK(perfect.successes == 100000);
  CHECK(perfect.estimate == 1.0);

  const Channel m3 = make_Mm(3);
  const auto r3 = monte_carlo_success(m3, make_rtilde_box(3), make_theorem3_protocol(3),
                                      uniform_prior(3), 50000, 99);
  CHECK(r3.successes == r3.trials);

  const Channel n3f = convert(n3, NumericMode::floating);
  const MessagePrior pf = uniform_prior(2, NumericMode::floating);
  const auto mc = monte_carlo_success(n3f, make_cglmp_behavior(), p, pf, 1000000, 42);
  CHECK(std::abs(mc.estimate - cglmp_closed_form()) < 4 * mc.std_error);
  CHECK(std::abs(mc.estimate - cglmp_closed_form()) < 0.0012);

  const auto a = monte_carlo_success(n3, make_uniform_behavior({2, 2, 3, 3}), p, uniform_prior(2),
                                     20000, 5, Exec::serial);
  const auto b = monte_carlo_success(n3, make_uniform_behavior({2, 2, 3, 3}), p, uniform_prior(2),
                                     20000, 5, Exec::parallel);
  const auto c = monte_carlo_success(n3, make_uniform_behavior({2, 2, 3, 3}), p, uniform_prior(2),
                                     20000, 5, Exec::parallel);
  CHECK(a.successes == b.successes);
  CHECK(b.successes == c.successes);
  const double exact = exact_success(n3, make_uniform_behavior({2, 2, 3, 3}), p, uniform_prior(2)).to_double();
  CHECK(std::abs(a.estimate - exact) < 4 * a.std_error);

  CHECK_THROWS_AS(monte_carlo_success(n3, p3, p, uniform_prior(2), 0, 1), std::invalid_argument);
}

TEST_CASE("shape and signaling errors") {
  const Channel n3 = make_Nm(3);
  const AssistedProtocol p = make_theorem2_protocol(3);
  CHECK_THROWS(exact_success(n3, make_extremal_box(2, 2), p, uniform_prior(2)));
  CHECK_THROWS(exact_success(make_Nm(2), make_extremal_box(3, 3), p, uniform_prior(2)));
  const Scenario s{2, 2, 3, 3};
  std::vector<Scalar> t(s.size(), q(0));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) t[s.index(x, y, y, 0)] = q(1);  // a = y: signals
  const Behavior sig(s, t);
  CHECK_THROWS_AS(exact_success(n3, sig, p, uniform_prior(2)), std::invalid_argument);
  AssistedProtocol broken = p;
  broken.guess_remap[0] = 1;
  CHECK_THROWS(broken.check());
}
