#pragma once

#include "kempe/graph.hpp"
#include "kempe/transform.hpp"

#include <string>

namespace kempe {

struct trace_check_report {
    bool ok = true;
    std::string reason;
};

// validates a transformation trace from scratch: every step proper over a
// fixed palette, recorded class changes exact, no step wider than the
// declared bound. shares no logic with the rewrite engine
trace_check_report check_trace(const graph& g, const transformation_trace& tr);

} // namespace kempe
