#ifndef CUBESIM_TRACE_IO_HPP
#define CUBESIM_TRACE_IO_HPP

#include <string>

#include "cubesim/adm.hpp"

namespace cubesim {

// CSV with a header row and one record per event. Columns:
// time_s, phase, event, knife_set, line_temp_0..n-1, switch_0..n-1, note.
// Formatting is fixed-precision so identical traces serialize byte-identically.
std::string trace_to_csv(const EventTrace& trace, int n_doors);

void write_trace_csv(const EventTrace& trace, int n_doors, const std::string& path);

}  // namespace cubesim

#endif
