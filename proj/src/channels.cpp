#include "zerocap/channels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "zerocap/sampling.hpp"

namespace zerocap {

IndexSpace::IndexSpace(std::vector<int> factors, std::vector<int> offsets)
    : factors_(std::move(factors)), offsets_(std::move(offsets)) {
  if (factors_.empty()) throw std::invalid_argument("index space needs at least one factor");
  if (offsets_.empty()) offsets_.assign(factors_.size(), 0);
  if (offsets_.size() != factors_.size()) {
    throw std::invalid_argument("index space offsets do not match its factors");
  }
  size_ = 1;
  for (int f : factors_) {
    if (f < 1) throw std::invalid_argument("index space factors must be positive");
    size_ *= static_cast<std::size_t>(f);
  }
}

IndexSpace IndexSpace::product(const IndexSpace& first, const IndexSpace& second) {
  std::vector<int> factors = first.factors_;
  factors.insert(factors.end(), second.factors_.begin(), second.factors_.end());
  std::vector<int> offsets = first.offsets_;
  offsets.insert(offsets.end(), second.offsets_.begin(), second.offsets_.end());
  return IndexSpace(std::move(factors), std::move(offsets));
}

std::vector<int> IndexSpace::unflatten(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("flat index outside the index space");
  std::vector<int> tuple(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    tuple[k] = static_cast<int>(index % factors_[k]);
    index /= factors_[k];
  }
  return tuple;
}

std::size_t IndexSpace::flatten(std::span<const int> tuple) const {
  if (tuple.size() != factors_.size()) throw std::invalid_argument("tuple arity mismatch");
  std::size_t index = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (tuple[k] < 0 || tuple[k] >= factors_[k]) {
      throw std::out_of_range("tuple component outside its factor");
    }
    index = index * factors_[k] + tuple[k];
  }
  return index;
}

std::vector<int> IndexSpace::label(std::size_t index) const {
  auto tuple = unflatten(index);
  for (std::size_t k = 0; k < tuple.size(); ++k) tuple[k] += offsets_[k];
  return tuple;
}

std::size_t IndexSpace::from_label(std::span<const int> label) const {
  if (label.size() != factors_.size()) throw std::invalid_argument("label arity mismatch");
  std::vector<int> tuple(label.begin(), label.end());
  for (std::size_t k = 0; k < tuple.size(); ++k) tuple[k] -= offsets_[k];
  return flatten(tuple);
}

Channel::Channel(IndexSpace input_space, IndexSpace output_space, std::vector<Scalar> columns)
    : input_space_(std::move(input_space)),
      output_space_(std::move(output_space)),
      mode_(common_mode(columns)),
      entries_(std::move(columns)) {
  if (entries_.size() != input_space_.size() * output_space_.size()) {
    throw std::invalid_argument("channel matrix has " + std::to_string(entries_.size()) +
                                " entries, expected " +
                                std::to_string(input_space_.size() * output_space_.size()));
  }
  for (auto& p : entries_) p = clamp_probability(p);
}

bool operator==(const Channel& lhs, const Channel& rhs) {
  return lhs.input_space_ == rhs.input_space_ && lhs.output_space_ == rhs.output_space_ &&
         lhs.mode_ == rhs.mode_ && lhs.entries_ == rhs.entries_;
}

int pi_perm(int m, int shift, int symbol) {
  if (m < 2) throw std::invalid_argument("pi_perm needs m >= 2");
  if (symbol < 0 || symbol >= m) throw std::out_of_range("pi_perm symbol out of range");
  if (shift < 0 || shift >= m - 1) throw std::out_of_range("pi_perm shift out of range");
  if (symbol == 0) return 0;
  return (symbol - 1 + shift) % (m - 1) + 1;
}

int pi_hat(int m, int u) {
  if (m < 1 || u < 0 || u >= m) throw std::out_of_range("pi_hat argument out of range");
  return (m - u) % m;
}

Channel make_Nm(int m) {
  if (m < 2) throw std::invalid_argument("N_m needs m >= 2");
  IndexSpace inputs({2, m});
  IndexSpace outputs({m + 1, m}, {1, 0});
  std::vector<Scalar> entries(inputs.size() * outputs.size(), Scalar::zero(NumericMode::rational));
  const Scalar omega = Scalar::rational(1, m + 1);
  for (int i1 = 0; i1 < 2; ++i1) {
    for (int i2 = 0; i2 < m; ++i2) {
      const std::size_t in = inputs.flatten(std::vector<int>{i1, i2});
      for (int o1 = 0; o1 <= m; ++o1) {  // zero-based; label is o1 + 1
        int o2 = 0;
        if (o1 == 0) {
          o2 = i1;
        } else if (o1 == 1) {
          o2 = i2;
        } else {
          o2 = (i1 + pi_perm(m, o1 - 2, i2)) % m;
        }
        entries[in * outputs.size() + outputs.flatten(std::vector<int>{o1, o2})] = omega;
      }
    }
  }
  return Channel(std::move(inputs), std::move(outputs), std::move(entries));
}

Channel make_Mm(int m) {
  if (m < 2) throw std::invalid_argument("M_m needs m >= 2");
  const int o1_count = m * (m - 1) + 1;
  IndexSpace inputs({m, 2});
  IndexSpace outputs({o1_count, m}, {1, 0});
  std::vector<Scalar> entries(inputs.size() * outputs.size(), Scalar::zero(NumericMode::rational));
  const Scalar omega = Scalar::rational(1, o1_count);
  for (int i1 = 0; i1 < m; ++i1) {
    for (int i2 = 0; i2 < 2; ++i2) {
      const std::size_t in = inputs.flatten(std::vector<int>{i1, i2});
      for (int o1 = 0; o1 < o1_count; ++o1) {
        int o2 = i1;
        if (o1 > 0) {
          const int block = (o1 - 1) / (m - 1);
          const int shift = (o1 - 1) % (m - 1);
          const int flip = (block != 0 && i1 == block) ? 1 : 0;
          o2 = (i1 + pi_perm(m, shift, i2 ^ flip)) % m;
        }
        entries[in * outputs.size() + outputs.flatten(std::vector<int>{o1, o2})] = omega;
      }
    }
  }
  return Channel(std::move(inputs), std::move(outputs), std::move(entries));
}

Channel make_identity_channel(int n) {
  if (n < 1) throw std::invalid_argument("identity channel needs n >= 1");
  std::vector<Scalar> entries(std::size_t(n) * n, Scalar::zero(NumericMode::rational));
  for (int i = 0; i < n; ++i) entries[std::size_t(i) * n + i] = Scalar::one(NumericMode::rational);
  return Channel(IndexSpace::flat(n), IndexSpace::flat(n), std::move(entries));
}

ValidationReport validate_channel(const Channel& c) {
  ValidationReport report;
  const Scalar zero = Scalar::zero(c.mode());
  const Scalar one = Scalar::one(c.mode());
  for (std::size_t in = 0; in < c.input_count(); ++in) {
    Scalar sum = zero;
    for (std::size_t out = 0; out < c.output_count(); ++out) {
      const Scalar& p = c(out, in);
      if (p < zero) {
        report.push_back({"nonnegativity",
                          "in=" + std::to_string(in) + ",out=" + std::to_string(out), p.str()});
      }
      sum += p;
    }
    const bool stochastic = c.mode() == NumericMode::rational
                                ? sum == one
                                : std::abs(sum.to_double() - 1.0) <= 1e-9;
    if (!stochastic) {
      report.push_back({"column-stochastic", "in=" + std::to_string(in), "sum=" + sum.str()});
    }
  }
  return report;
}

Channel make_channel(IndexSpace input_space, IndexSpace output_space,
                     const std::vector<std::vector<Scalar>>& columns) {
  if (columns.size() != input_space.size()) {
    throw std::invalid_argument("channel needs one column per input");
  }
  std::vector<Scalar> entries;
  entries.reserve(input_space.size() * output_space.size());
  for (const auto& column : columns) {
    if (column.size() != output_space.size()) {
      throw std::invalid_argument("channel column length does not match the output space");
    }
    entries.insert(entries.end(), column.begin(), column.end());
  }
  Channel c(std::move(input_space), std::move(output_space), std::move(entries));
  const auto report = validate_channel(c);
  if (!report.empty()) {
    std::ostringstream os;
    os << "invalid channel:";
    for (const auto& v : report) os << " [" << v.constraint << " " << v.location << " " << v.detail << "]";
    throw std::invalid_argument(os.str());
  }
  return c;
}

Channel tensor_channels(const Channel& first, const Channel& second) {
  if (first.mode() != second.mode()) {
    throw ModeMismatch("tensor product of channels in different numeric modes");
  }
  IndexSpace inputs = IndexSpace::product(first.input_space(), second.input_space());
  IndexSpace outputs = IndexSpace::product(first.output_space(), second.output_space());
  const std::size_t n_out = outputs.size();
  std::vector<Scalar> entries(inputs.size() * n_out, Scalar::zero(first.mode()));
  for (std::size_t i1 = 0; i1 < first.input_count(); ++i1)
    for (std::size_t i2 = 0; i2 < second.input_count(); ++i2) {
      const std::size_t in = i1 * second.input_count() + i2;
      for (std::size_t o1 = 0; o1 < first.output_count(); ++o1) {
        if (first(o1, i1).is_zero()) continue;
        for (std::size_t o2 = 0; o2 < second.output_count(); ++o2) {
          entries[in * n_out + o1 * second.output_count() + o2] = first(o1, i1) * second(o2, i2);
        }
      }
    }
  return Channel(std::move(inputs), std::move(outputs), std::move(entries));
}

Channel convert(const Channel& c, NumericMode mode) {
  std::vector<Scalar> entries;
  entries.reserve(c.input_count() * c.output_count());
  for (std::size_t in = 0; in < c.input_count(); ++in)
    for (const auto& p : c.column(in)) entries.push_back(p.to_mode(mode));
  return Channel(c.input_space(), c.output_space(), std::move(entries));
}

std::size_t sample_output(const Channel& c, std::size_t input, std::uint64_t seed) {
  if (input >= c.input_count()) throw std::out_of_range("channel input index out of range");
  std::mt19937_64 engine(seed);
  return DiscreteSampler(c.column(input))(engine);
}

std::vector<std::size_t> sample_outputs(const Channel& c, std::size_t input, std::size_t count,
                                        std::uint64_t seed) {
  if (input >= c.input_count()) throw std::out_of_range("channel input index out of range");
  const DiscreteSampler sampler(c.column(input));
  std::mt19937_64 engine(seed);
  std::vector<std::size_t> out(count);
  for (auto& o : out) o = sampler(engine);
  return out;
}

}  // namespace zerocap
