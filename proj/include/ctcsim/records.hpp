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

/**
 * @file
 * Trial record files (JSON Lines) and histogram export (CSV).
 *
 * Record line:
 *   {"trial_id":0,"today":[w,z],"key_a":[x,y],"key_b":[u,v],"decoded":[w',z']|null}
 *
 * Histogram CSV:
 *   label,count,probability
 */

#pragma once

#include "ctcsim/histogram.hpp"
#include "ctcsim/protocols.hpp"

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctcsim {

class RecordFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string record_to_json_line(const TrialRecord& record);
TrialRecord record_from_json_line(const std::string& line);

void write_records(std::ostream& out, std::span<const TrialRecord> records);
/// Reads every non-empty line; throws RecordFormatError with the line number on bad input.
std::vector<TrialRecord> read_records(std::istream& in);

/// Exact histograms write an empty count column.
void write_histogram_csv(std::ostream& out, const Histogram& histogram);

}  // namespace ctcsim
