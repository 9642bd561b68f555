#pragma once

#include <string>

#include "json.hpp"
#include "roldarp/adversary.hpp"
#include "roldarp/analysis.hpp"
#include "roldarp/core.hpp"

namespace roldarp {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);

/// Field order is fixed: vertices, origin, edges, T, f, k?, bipartition?,
/// requests, pre_closed?. Arrays are sorted by canonical vertex order, so
/// identical instances serialize byte-identically.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

/// Schedules serialize as an ordered action array.
Json schedule_to_json(const Schedule& sched);
Schedule schedule_from_json(const Json& j);

Json transcript_to_json(const AdversaryTranscript& transcript);

Json bound_report_to_json(const BoundReport& report);
BoundReport bound_report_from_json(const Json& j);
std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& report);

std::string dump_json(const Json& j);

std::string read_text_file(const std::string& path);
Json parse_json_text(const std::string& text);  // throws kParseError
/// Writes via a temp file and rename so readers never observe partial output.
void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace roldarp
