#pragma once

#include <string>

#include "eqsched/instance.hpp"
#include "eqsched/schedule.hpp"

namespace eqsched {

// Both renderers take a schedule in sorted job order and label jobs by their
// input position.

inline constexpr int kGanttPxPerUnit = 40;
inline constexpr int kGanttLaneHeight = 30;
inline constexpr int kGanttLeftMargin = 50;
inline constexpr int kGanttTopMargin = 30;

/// Fill color of a job label k (1-based): hsl((47 k) mod 360, 65%, 72%).
std::string gantt_color(int label);

/// SVG 1.1 with one lane per machine (machine 1 on top), one labeled rect
/// per interval, and a dashed marker at every distinct release time. Time t
/// maps to x = kGanttLeftMargin + kGanttPxPerUnit * t.
std::string render_svg(const IntervalSchedule& sched, const Instance& inst);

/// One line per machine, `M<q> |...|`, one character per unit slot from time
/// 0 to the last completion: the job label (1-9, then a-z, A-Z, '#') or '.'
/// when idle. Throws std::domain_error unless all endpoints are integers.
std::string render_ascii(const IntervalSchedule& sched, const Instance& inst);

}  // namespace eqsched
