#pragma once

#include "bcast/model.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bcast {

/// Malformed trace or schedule text. The message carries the line number.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// `#bcast-trace v1`, then `<page> <arrival> <deadline>` per line. `origin` goes into a comment line.
void write_trace(std::ostream& os, const Trace& trace, const std::string& origin = {});
/// Parses and validates. Throws FormatError or TraceError.
Trace read_trace(std::istream& is);

/// `#bcast-schedule v1 speed=<s>`, then `<time>: <page> [<page>...]` per recorded slot.
void write_schedule(std::ostream& os, const Schedule& schedule);
/// Slots and speed only; call assign_finish_times to fill in finish times.
Schedule read_schedule(std::istream& is);

Trace load_trace_file(const std::string& path);
void save_trace_file(const std::string& path, const Trace& trace, const std::string& origin = {});
Schedule load_schedule_file(const std::string& path);
void save_schedule_file(const std::string& path, const Schedule& schedule);

}  // namespace bcast
