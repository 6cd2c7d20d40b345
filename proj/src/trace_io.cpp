#include "bcast/trace_io.hpp"

#include <fstream>
#include <sstream>

namespace bcast {

namespace {

constexpr std::string_view kTraceHeader = "#bcast-trace v1";
constexpr std::string_view kScheduleHeader = "#bcast-schedule v1";

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw FormatError("line " + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

// Reads the header line, skipping nothing: it must come first.
std::string header_line(std::istream& is, std::string_view expected) {
    std::string line;
    if (!std::getline(is, line)) throw FormatError("empty input, expected '" + std::string(expected) + "'");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(expected, 0) != 0) fail(1, "expected header '" + std::string(expected) + "'");
    return line.substr(expected.size());
}

}  // namespace

void write_trace(std::ostream& os, const Trace& trace, const std::string& origin) {
    os << kTraceHeader << '\n';
    if (!origin.empty()) os << "# " << origin << '\n';
    for (const auto& r : trace.requests()) os << r.page << ' ' << r.arrival << ' ' << r.deadline << '\n';
}

Trace read_trace(std::istream& is) {
    header_line(is, kTraceHeader);
    std::vector<Request> raw;
    std::string line;
    std::size_t n = 1;
    while (std::getline(is, line)) {
        ++n;
        const std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream in(body);
        Request r;
        std::string extra;
        if (!(in >> r.page >> r.arrival >> r.deadline)) fail(n, "expected '<page> <arrival> <deadline>'");
        if (in >> extra) fail(n, "trailing text '" + extra + "'");
        raw.push_back(r);
    }
    return validate_trace(raw);
}

void write_schedule(std::ostream& os, const Schedule& schedule) {
    os << kScheduleHeader << " speed=" << schedule.speed << '\n';
    for (const auto& [t, pages] : schedule.slots) {
        os << t << ':';
        for (PageId p : pages) os << ' ' << p;
        os << '\n';
    }
}

Schedule read_schedule(std::istream& is) {
    const std::string rest = header_line(is, kScheduleHeader);
    Schedule s;
    {
        std::istringstream in(rest);
        std::string field;
        if (!(in >> field) || field.rfind("speed=", 0) != 0) fail(1, "missing speed=<s>");
        try {
            std::size_t used = 0;
            s.speed = std::stoi(field.substr(6), &used);
            if (used != field.size() - 6) throw std::invalid_argument("speed");
        } catch (const std::exception&) {
            fail(1, "bad speed '" + field.substr(6) + "'");
        }
    }
    std::string line;
    std::size_t n = 1;
    while (std::getline(is, line)) {
        ++n;
        const std::string body = strip_comment(line);
        if (blank(body)) continue;
        const auto colon = body.find(':');
        if (colon == std::string::npos) fail(n, "expected '<time>: <page> ...'");
        std::istringstream head(body.substr(0, colon));
        Time t = 0;
        std::string extra;
        if (!(head >> t) || (head >> extra)) fail(n, "bad time");
        if (s.slots.contains(t)) fail(n, "time " + std::to_string(t) + " listed twice");
        std::istringstream in(body.substr(colon + 1));
        std::vector<PageId> pages;
        PageId p = 0;
        while (in >> p) pages.push_back(p);
        if (!in.eof()) fail(n, "bad page id");
        s.slots[t] = std::move(pages);
    }
    return s;
}

Trace load_trace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_trace(in);
}

void save_trace_file(const std::string& path, const Trace& trace, const std::string& origin) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    write_trace(out, trace, origin);
}

Schedule load_schedule_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_schedule(in);
}

void save_schedule_file(const std::string& path, const Schedule& schedule) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    write_schedule(out, schedule);
}

}  // namespace bcast
