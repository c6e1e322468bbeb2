#include "cubesim/trace_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cubesim {

std::string trace_to_csv(const EventTrace& trace, int n_doors) {
    std::string out = "time_s,phase,event,knife_set";
    for (int i = 0; i < n_doors; ++i) out += ",line_temp_" + std::to_string(i);
    for (int i = 0; i < n_doors; ++i) out += ",switch_" + std::to_string(i);
    out += ",note\n";

    char buf[64];
    for (const TraceRecord& rec : trace.records) {
        std::snprintf(buf, sizeof(buf), "%.6f", rec.time_s);
        out += buf;
        out += ',';
        out += to_string(rec.phase);
        out += ',';
        out += rec.event;
        out += ',';
        if (rec.knife_set >= 0) out += std::to_string(rec.knife_set);
        for (double temp : rec.line_temps) {
            std::snprintf(buf, sizeof(buf), ",%.3f", temp);
            out += buf;
        }
        for (bool sw : rec.switches) out += sw ? ",1" : ",0";
        out += ',';
        out += rec.note;
        out += '\n';
    }
    return out;
}

void write_trace_csv(const EventTrace& trace, int n_doors, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open trace file for writing: " + path);
    file << trace_to_csv(trace, n_doors);
    if (!file)
        throw std::runtime_error("failed writing trace file: " + path);
}

}  // namespace cubesim
