/*
 * Copyright 2026 The privlogit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PRIVLOGIT_HARNESS_REPORT_HPP_
#define PRIVLOGIT_HARNESS_REPORT_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "privlogit/core/optimizer.hpp"
#include "privlogit/harness/bench.hpp"
#include "privlogit/protocol/trace.hpp"

namespace privlogit::harness {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { kJson, kCsv };
ReportFormat parse_format(const std::string& s);

struct EmitOptions {
  // Drops wall-clock fields so seeded runs produce identical bytes.
  bool include_timing = true;
};

nlohmann::ordered_json to_json(const BenchReport& r, const EmitOptions& opts = {});
BenchReport report_from_json(const nlohmann::json& j);

std::string emit(const BenchReport& r, ReportFormat format, const EmitOptions& opts = {});

nlohmann::ordered_json to_json(const FitResult& r);
nlohmann::ordered_json to_json(const protocol::ProtocolTrace& t, const EmitOptions& opts = {});
nlohmann::ordered_json to_json(const secure::OpCounters& c);

}  // namespace privlogit::harness

#endif  // PRIVLOGIT_HARNESS_REPORT_HPP_
