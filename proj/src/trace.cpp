#include "effbounds/trace.hpp"

namespace effbounds {

const TraceEntry* find_entry(const Trace& t, const std::string& name) {
  for (const TraceEntry& e : t) {
    if (e.name == name) return &e;
    if (const TraceEntry* c = find_entry(e.children, name)) return c;
  }
  return nullptr;
}

nlohmann::json trace_to_json(const Trace& t, const Context& ctx) {
  nlohmann::json out = nlohmann::json::array();
  for (const TraceEntry& e : t) {
    nlohmann::json j{{"name", e.name}, {"citation", e.citation}, {"magnitude", to_json(e.value, ctx)}};
    if (!e.note.empty()) j["note"] = e.note;
    if (!e.children.empty()) j["children"] = trace_to_json(e.children, ctx);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace effbounds
