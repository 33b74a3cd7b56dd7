#include "pnr/event_log.hpp"

namespace pnr {

const Event& EventLog::emit(Time time, std::string module, std::string kind,
                            nlohmann::json fields) {
  Event event;
  event.seq = events_.size() + 1;
  event.time = time;
  event.module = std::move(module);
  event.kind = std::move(kind);
  event.fields = std::move(fields);
  events_.push_back(std::move(event));
  return events_.back();
}

std::size_t EventLog::count(std::string_view kind) const {
  std::size_t n = 0;
  for (const Event& e : events_) {
    if (e.kind == kind) ++n;
  }
  return n;
}

std::string EventLog::to_jsonl() const {
  std::string out;
  for (const Event& e : events_) {
    nlohmann::json record = {{"seq", e.seq},
                             {"time", e.time},
                             {"module", e.module},
                             {"kind", e.kind},
                             {"fields", e.fields}};
    out += record.dump();
    out += '\n';
  }
  return out;
}

}  // namespace pnr
