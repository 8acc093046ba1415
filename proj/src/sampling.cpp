#include "zerocap/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace zerocap {

namespace {

constexpr unsigned __int128 kTwo64 = static_cast<unsigned __int128>(1) << 64;

unsigned __int128 from_mpz(const mpz_class& z) {
  // z <= 2^64 here.
  const mpz_class high = z >> 64;
  const mpz_class low = z - (high << 64);
  unsigned __int128 value = static_cast<unsigned __int128>(high.get_ui()) << 64;
  mpz_class low_hi = low >> 32;
  mpz_class low_lo = low - (low_hi << 32);
  value += (static_cast<unsigned __int128>(low_hi.get_ui()) << 32) + low_lo.get_ui();
  return value;
}

}  // namespace

DiscreteSampler::DiscreteSampler(std::span<const Scalar> weights) {
  if (weights.empty()) throw std::invalid_argument("cannot sample from an empty distribution");
  std::vector<Scalar> copy(weights.begin(), weights.end());
  const NumericMode mode = common_mode(copy);
  Scalar total = Scalar::zero(mode);
  for (const auto& w : weights) {
    if (w.sign() < 0) throw std::invalid_argument("negative sampling weight");
    total += w;
  }
  if (!total.is_positive(0.0)) throw std::invalid_argument("sampling weights sum to zero");

  thresholds_.reserve(weights.size());
  Scalar cumulative = Scalar::zero(mode);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    cumulative += weights[k];
    unsigned __int128 threshold = 0;
    if (k + 1 == weights.size()) {
      threshold = kTwo64;
    } else if (mode == NumericMode::rational) {
      const mpq_class scaled = cumulative.as_rational() / total.as_rational();
      mpz_class numerator = scaled.get_num();
      numerator <<= 64;
      mpz_class q;
      mpz_cdiv_q(q.get_mpz_t(), numerator.get_mpz_t(), scaled.get_den().get_mpz_t());
      threshold = from_mpz(q);
    } else {
      const long double fraction =
          static_cast<long double>(cumulative.to_double()) / total.to_double();
      const long double scaled = std::ceil(fraction * 18446744073709551616.0L);
      threshold = scaled >= 18446744073709551616.0L ? kTwo64
                                                     : static_cast<unsigned __int128>(scaled);
    }
    thresholds_.push_back(threshold);
  }
}

std::size_t DiscreteSampler::operator()(std::uint64_t draw) const {
  const unsigned __int128 d = draw;
  for (std::size_t k = 0; k < thresholds_.size(); ++k) {
    if (d < thresholds_[k]) return k;
  }
  return thresholds_.size() - 1;
}

std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace zerocap
