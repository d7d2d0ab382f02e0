// Copyright 2026 The ctcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctcsim/records.hpp"

#include <json.hpp>

#include <charconv>
#include <istream>
#include <ostream>

namespace ctcsim {

namespace {

using json = nlohmann::ordered_json;

json label_json(BellLabel l) { return json::array({l.x(), l.y()}); }

BellLabel label_from_json(const json& j, const char* field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw RecordFormatError(std::string("field '") + field + "' must be a pair of bits");
  }
  try {
    return BellLabel(j[0].get<int>(), j[1].get<int>());
  } catch (const std::invalid_argument&) {
    throw RecordFormatError(std::string("field '") + field + "' must be a pair of bits");
  }
}

}  // namespace

std::string record_to_json_line(const TrialRecord& record) {
  json j;
  j["trial_id"] = record.trial_id;
  j["today"] = label_json(record.today);
  j["key_a"] = label_json(record.key_a);
  j["key_b"] = label_json(record.key_b);
  j["decoded"] = record.decoded ? label_json(*record.decoded) : json(nullptr);
  return j.dump();
}

TrialRecord record_from_json_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw RecordFormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw RecordFormatError("record is not a JSON object");
  for (const char* field : {"trial_id", "today", "key_a", "key_b"}) {
    if (!j.contains(field)) throw RecordFormatError(std::string("missing field '") + field + "'");
  }
  if (!j["trial_id"].is_number_unsigned()) throw RecordFormatError("field 'trial_id' must be a non-negative integer");
  TrialRecord r;
  r.trial_id = j["trial_id"].get<std::uint64_t>();
  r.today = label_from_json(j["today"], "today");
  r.key_a = label_from_json(j["key_a"], "key_a");
  r.key_b = label_from_json(j["key_b"], "key_b");
  if (j.contains("decoded") && !j["decoded"].is_null()) r.decoded = label_from_json(j["decoded"], "decoded");
  return r;
}

void write_records(std::ostream& out, std::span<const TrialRecord> records) {
  for (const auto& r : records) out << record_to_json_line(r) << '\n';
}

std::vector<TrialRecord> read_records(std::istream& in) {
  std::vector<TrialRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(record_from_json_line(line));
    } catch (const RecordFormatError& e) {
      throw RecordFormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

void write_histogram_csv(std::ostream& out, const Histogram& histogram) {
  out << "label,count,probability\n";
  char buf[32];
  for (std::size_t i = 0; i < histogram.size(); ++i) {
    // Shortest representation that round-trips.
    const auto res = std::to_chars(buf, buf + sizeof buf, histogram.probabilities[i]);
    out << histogram.labels[i] << ',';
    if (histogram.is_sampled()) out << histogram.counts[i];
    out << ',' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)) << '\n';
  }
}

}  // namespace ctcsim
