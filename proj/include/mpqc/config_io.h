// Copyright 2026 The MPQC Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MPQC_CONFIG_IO_H
#define MPQC_CONFIG_IO_H

#include <string>

#include "json.hpp"
#include "mpqc/protocol.h"

namespace mpqc {

/// Parses the adversary section. Throws ConfigInvalid.
AdversaryStrategy adversary_from_json(const nlohmann::json &j);
/// Parses a run config. "code" is a catalog name or "vfile:wfile". Throws ConfigInvalid.
RunConfig config_from_json(const nlohmann::json &j);
RunConfig load_config_file(const std::string &path);
nlohmann::json config_to_json(const RunConfig &c);

nlohmann::json transcript_to_json(const ProtocolTranscript &t);

std::string metrics_csv_header();
/// One row, no trailing newline.
std::string metrics_csv_row(const ProtocolTranscript &t);

}  // namespace mpqc

#endif
