#include "ngr/report.hpp"

#include <iomanip>
#include <sstream>

namespace ngr {

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Json make_report(const std::string& command, const std::string& input_digest,
                 const Json& parameters, const Json& result,
                 const std::vector<Claim>& claims) {
  Json cl = Json::array();
  for (const auto& c : claims) {
    cl.push_back(Json{{"claim_id", c.id},
                      {"status", c.pass ? "pass" : "fail"},
                      {"details", c.details}});
  }
  return Json{{"command", command},
              {"input_digest", input_digest},
              {"parameters", parameters},
              {"result", result},
              {"verified_claims", cl}};
}

bool validate_report(const Json& report, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!report.is_object()) return fail("report is not an object");
  for (const char* key :
       {"command", "input_digest", "parameters", "result", "verified_claims"})
    if (!report.contains(key)) return fail(std::string("missing key ") + key);
  if (!report["command"].is_string()) return fail("command must be a string");
  if (!report["input_digest"].is_string())
    return fail("input_digest must be a string");
  if (!report["parameters"].is_object())
    return fail("parameters must be an object");
  if (!report["verified_claims"].is_array())
    return fail("verified_claims must be an array");
  for (const auto& c : report["verified_claims"]) {
    if (!c.is_object() || !c.contains("claim_id") || !c.contains("status") ||
        !c.contains("details"))
      return fail("claim entries need claim_id, status, details");
    if (!c["claim_id"].is_string()) return fail("claim_id must be a string");
    std::string st = c["status"].get<std::string>();
    if (st != "pass" && st != "fail") return fail("status must be pass|fail");
  }
  return true;
}

Json series_to_json(const MatrixSeries& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) {
      Json coeffs = Json::array();
      for (int d = 0; d <= m.trunc(); ++d) coeffs.push_back(m.at(i, j, d));
      row.push_back(coeffs);
    }
    rows.push_back(row);
  }
  return rows;
}

Json rules_to_json(const GroebnerBasis& gb) {
  const auto& pres = gb.presentation();
  Json rules = Json::array();
  for (const auto& r : gb.rules()) {
    Json tail = Json::array();
    for (const auto& [w, c] : r.tail.terms())
      tail.push_back(Json{{"coeff", c.str()}, {"word", pres.format_word(w)}});
    rules.push_back(Json{{"residue", r.lead.start()},
                         {"lead", pres.format_word(r.lead)},
                         {"tail", tail}});
  }
  return Json{{"completed_through", gb.completed_through()},
              {"rules", rules}};
}

Json syzygy_report_to_json(const SyzygyReport& rep) {
  Json hist = Json::object();
  for (const auto& [deg, cnt] : rep.minimal_degrees)
    hist[std::to_string(deg)] = cnt;
  Json kd = Json::object();
  for (const auto& [deg, cnt] : rep.kernel_dimensions)
    kd[std::to_string(deg)] = cnt;
  Json j{{"generator_degrees", rep.generator_degrees},
         {"minimal_syzygy_degrees", hist},
         {"kernel_dimensions", kd},
         {"cutoff", rep.cutoff}};
  if (rep.saturated_at)
    j["saturated_at"] = *rep.saturated_at;
  else
    j["saturated_at"] = nullptr;
  return j;
}

Json betti_to_json(const BettiTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::object();
    for (const auto& [shift, mult] : row) r[std::to_string(shift)] = mult;
    rows.push_back(r);
  }
  return Json{{"simple_residue", t.simple_residue},
              {"deg_bound", t.deg_bound},
              {"betti", rows}};
}

Json probe_to_json(const ProbeReport& rep) {
  Json hist = Json::object();
  for (const auto& [deg, cnt] : rep.degree_histogram)
    hist[std::to_string(deg)] = cnt;
  return Json{{"d", rep.d},
              {"trials", rep.trials},
              {"seed", rep.seed},
              {"bound", rep.bound},
              {"max_minimal_degree", rep.max_minimal_degree},
              {"degree_histogram", hist},
              {"bound_satisfied", rep.bound_satisfied}};
}

Json processing_to_json(const ProcessingReport& rep,
                        const QuiverPresentation& pres) {
  Json j{{"r", rep.r},
         {"degree_bound", rep.degree_bound},
         {"side", rep.side == Side::Right ? "right" : "left"},
         {"verified", rep.verified}};
  if (rep.counterexample) {
    const auto& [u, w, s] = *rep.counterexample;
    j["counterexample"] = Json{{"u", pres.format_word(u)},
                               {"u_residue", u.start()},
                               {"w", pres.format_word(w)},
                               {"s", pres.format_word(s)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

}  // namespace ngr
