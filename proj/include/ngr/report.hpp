#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ngr/coherence.hpp"
#include "ngr/groebner.hpp"
#include "ngr/hilbert.hpp"

namespace ngr {

using Json = nlohmann::json;  // std::map keys: always emitted sorted

/// FNV-1a 64-bit content hash, hex encoded.
std::string content_digest(const std::string& bytes);

struct Claim {
  std::string id;
  bool pass = false;
  Json details = Json::object();
};

Json make_report(const std::string& command, const std::string& input_digest,
                 const Json& parameters, const Json& result,
                 const std::vector<Claim>& claims);

/// Structural validation against schema/report.schema.json: required keys,
/// types, and claim-entry shape.
bool validate_report(const Json& report, std::string* why = nullptr);

Json series_to_json(const MatrixSeries& m);  // [row][col][degree]
Json rules_to_json(const GroebnerBasis& gb);
Json syzygy_report_to_json(const SyzygyReport& rep);
Json betti_to_json(const BettiTable& t);
Json probe_to_json(const ProbeReport& rep);
Json processing_to_json(const ProcessingReport& rep,
                        const QuiverPresentation& pres);

}  // namespace ngr
