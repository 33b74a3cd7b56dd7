#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pnr/bytes.hpp"

namespace pnr {

struct Event {
  std::uint64_t seq = 0;
  Time time = 0;
  std::string module;
  std::string kind;
  nlohmann::json fields;
};

// Append-only, densely numbered. Rendering is canonical (sorted keys, no
// floats), so identical runs produce identical bytes.
class EventLog {
 public:
  const Event& emit(Time time, std::string module, std::string kind,
                    nlohmann::json fields);

  const std::vector<Event>& events() const { return events_; }
  std::size_t count(std::string_view kind) const;
  std::string to_jsonl() const;

 private:
  std::vector<Event> events_;
};

}  // namespace pnr
