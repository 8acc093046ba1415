#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "zerocap/behaviors.hpp"
#include "zerocap/channels.hpp"
#include "zerocap/graphs.hpp"
#include "zerocap/protocols.hpp"
#include "zerocap/quantum.hpp"

namespace zerocap {

using Json = nlohmann::ordered_json;

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed document (bad structure, shape or value).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rationals as "num/den" strings, floats as JSON numbers.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, NumericMode mode);

/// {"scenario":{"x","y","a","b"}, "mode":"rational"|"float", "p":[x][y][a][b]}
Json behavior_to_json(const Behavior& b);
Behavior behavior_from_json(const Json& j);

/// {"inputs":{"factors","offsets"}, "outputs":{...}, "mode", "matrix"} with
/// one array per input. Reading validates the channel.
Json channel_to_json(const Channel& c);
Channel channel_from_json(const Json& j);

/// "p edge n m" header then "e u v" lines with 1-based vertices.
std::string graph_to_dimacs(const ConfusabilityGraph& g);
ConfusabilityGraph graph_from_dimacs(const std::string& text);
/// {"vertices": n, "labels": [...], "adjacency": [[...], ...]}
Json graph_to_json(const ConfusabilityGraph& g);
ConfusabilityGraph graph_from_json(const Json& j);

Json capacity_to_json(const CapacityResult& r);

/// Explicit tables for the four maps plus the remap; kSkip is written as
/// null in "dec_box_input".
Json protocol_to_json(const AssistedProtocol& p);
AssistedProtocol protocol_from_json(const Json& j);

/// {success, zero_error, branches}; zero_error is null in floating mode.
Json success_record(const Scalar& success, std::optional<bool> zero_error, std::size_t branches);

/// {"dim_a","dim_b","state":[[[re,im],...],...],"alice":[input][outcome] matrices,"bob":...}
Json quantum_model_to_json(const QuantumModel& q);
QuantumModel quantum_model_from_json(const Json& j);

/// One row per (x,y,a,b) / (input, output) with a header line.
std::string behavior_to_csv(const Behavior& b);
std::string channel_to_csv(const Channel& c);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
Json read_json_file(const std::filesystem::path& path);

}  // namespace zerocap
