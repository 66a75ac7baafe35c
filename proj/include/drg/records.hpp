#pragma once

// Result records of the enumerator: one JSON object per line, keyed by the
// array's text format.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "drg/arrays.hpp"
#include "drg/error.hpp"

namespace drg {

enum class Classification { PseudoGeometric, CertifiedNonGeometric, Unresolved, Filtered };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::PseudoGeometric: return "pseudo_geometric";
    case Classification::CertifiedNonGeometric: return "certified_non_geometric";
    case Classification::Unresolved: return "unresolved";
    case Classification::Filtered: return "filtered";
  }
  return "?";
}

inline Classification parse_classification(const std::string& s) {
  for (auto c : {Classification::PseudoGeometric, Classification::CertifiedNonGeometric, Classification::Unresolved,
                 Classification::Filtered})
    if (s == to_string(c)) return c;
  throw ParseError("unknown classification '" + s + "'");
}

struct FilterStatus {
  std::string name;
  std::string status;  // "pass", "fail" or "n/a"
  friend bool operator==(const FilterStatus&, const FilterStatus&) = default;
};

struct SpectrumEntry {
  std::string theta;
  std::string mult;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct ResultRecord {
  IntersectionArray ia;
  std::int64_t n = 0;
  std::vector<SpectrumEntry> spectrum;
  std::string theta_min;
  Classification cls = Classification::Unresolved;
  std::string reason;
  std::vector<std::int64_t> tau;  // tau_1..tau_D, pseudo-geometric only
  std::vector<std::int64_t> psi;  // psi_0..psi_{D-1}, pseudo-geometric only
  std::vector<FilterStatus> filters;
  std::vector<std::string> flags;

  std::string key() const { return format_array(ia); }
  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// Canonical order: D, then k ascending, then b descending, then c ascending
/// (both lexicographic).
inline bool canonical_less(const IntersectionArray& x, const IntersectionArray& y) {
  if (x.diameter() != y.diameter()) return x.diameter() < y.diameter();
  if (x.valency() != y.valency()) return x.valency() < y.valency();
  if (x.b_seq() != y.b_seq()) return x.b_seq() > y.b_seq();
  return x.c_seq() < y.c_seq();
}

inline std::string to_json_line(const ResultRecord& r) {
  nlohmann::ordered_json j;
  j["ia"] = r.key();
  j["n"] = r.n;
  auto spec = nlohmann::ordered_json::array();
  for (const auto& e : r.spectrum) spec.push_back(nlohmann::ordered_json{{"theta", e.theta}, {"mult", e.mult}});
  j["spectrum"] = spec;
  j["theta_min"] = r.theta_min;
  j["class"] = to_string(r.cls);
  j["reason"] = r.reason;
  j["tau"] = r.tau.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.tau);
  j["psi"] = r.psi.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.psi);
  nlohmann::ordered_json filters = nlohmann::ordered_json::object();
  for (const auto& f : r.filters) filters[f.name] = f.status;
  j["filters"] = filters;
  j["flags"] = r.flags;
  return j.dump();
}

inline ResultRecord parse_record(const std::string& line) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(line);
    ResultRecord r;
    r.ia = parse_array(j.at("ia").get<std::string>());
    r.n = j.at("n").get<std::int64_t>();
    for (const auto& e : j.at("spectrum"))
      r.spectrum.push_back({e.at("theta").get<std::string>(), e.at("mult").get<std::string>()});
    r.theta_min = j.at("theta_min").get<std::string>();
    r.cls = parse_classification(j.at("class").get<std::string>());
    r.reason = j.at("reason").get<std::string>();
    if (!j.at("tau").is_null()) r.tau = j.at("tau").get<std::vector<std::int64_t>>();
    if (!j.at("psi").is_null()) r.psi = j.at("psi").get<std::vector<std::int64_t>>();
    for (const auto& [name, status] : j.at("filters").items()) r.filters.push_back({name, status.get<std::string>()});
    r.flags = j.at("flags").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed result record: ") + e.what());
  }
}

/// Canonical key of a stored line without a full parse.
inline std::string record_key(const std::string& line) {
  try {
    return nlohmann::ordered_json::parse(line).at("ia").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed result record: ") + e.what());
  }
}

/// Non-empty lines of a record stream.
inline std::vector<std::string> read_record_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

/// Merges record lines from several runs into canonical order. Identical
/// duplicate keys collapse; conflicting duplicates are an error.
inline std::vector<std::string> merge_record_lines(const std::vector<std::vector<std::string>>& runs) {
  std::vector<std::pair<IntersectionArray, std::string>> all;
  for (const auto& run : runs)
    for (const auto& line : run) all.emplace_back(parse_array(record_key(line)), line);
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i > 0 && all[i].first == all[i - 1].first) {
      if (all[i].second != all[i - 1].second)
        throw ParseError("conflicting records for " + format_array(all[i].first));
      continue;
    }
    out.push_back(all[i].second);
  }
  return out;
}

}  // namespace drg
