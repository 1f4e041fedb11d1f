#pragma once

#include <iosfwd>

#include <json.hpp>

namespace enrq {

// Dispatches one job object {"command": ..., "params": {...}, "output":
// "json"|"table"} to the library and writes the result to out. The schema
// is strict: unknown fields are rejected. Returns the process exit code:
// 0 on success, 2 on a validation error (a machine-readable error object is
// written), 3 on internal inconsistency (must never occur).
int run_job(const nlohmann::json& job, std::ostream& out);

}  // namespace enrq
