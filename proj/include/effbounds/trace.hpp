#pragma once

#include <string>
#include <vector>

#include "effbounds/magnitude.hpp"

namespace effbounds {

// One derivation step: the quantity, the formula that produced it, its value.
struct TraceEntry {
  std::string name;
  std::string citation;
  Magnitude value;
  std::string note;
  std::vector<TraceEntry> children;
};

using Trace = std::vector<TraceEntry>;

inline TraceEntry& record(Trace& t, std::string name, std::string citation, Magnitude value,
                          std::string note = {}) {
  t.push_back({std::move(name), std::move(citation), std::move(value), std::move(note), {}});
  return t.back();
}

const TraceEntry* find_entry(const Trace& t, const std::string& name);  // depth-first

nlohmann::json trace_to_json(const Trace& t, const Context& ctx = {});

}  // namespace effbounds
