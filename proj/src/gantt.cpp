#include "eqsched/gantt.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace eqsched {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

double x_of(const Rational& t) { return kGanttLeftMargin + kGanttPxPerUnit * t.convert_to<double>(); }

char ascii_label(int label) {
  if (label >= 1 && label <= 9) return static_cast<char>('0' + label);
  if (label >= 10 && label < 36) return static_cast<char>('a' + (label - 10));
  if (label >= 36 && label < 62) return static_cast<char>('A' + (label - 36));
  return '#';
}

}  // namespace

std::string gantt_color(int label) {
  return "hsl(" + std::to_string((47 * label) % 360) + ",65%,72%)";
}

std::string render_svg(const IntervalSchedule& sched, const Instance& inst) {
  Rational end = inst.releases.back();
  for (const auto& pieces : sched.jobs) {
    for (const auto& piece : pieces) end = std::max(end, piece.end);
  }
  const double width = x_of(end) + 20;
  const double lanes_bottom = kGanttTopMargin + kGanttLaneHeight * inst.m;
  const double height = lanes_bottom + 30;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" font-family=\"monospace\" font-size=\"12\">\n";

  for (int q = 0; q < inst.m; ++q) {
    const double y = kGanttTopMargin + kGanttLaneHeight * q;
    out << "  <rect class=\"lane\" x=\"" << kGanttLeftMargin << "\" y=\"" << num(y) << "\" width=\""
        << num(width - 20 - kGanttLeftMargin) << "\" height=\"" << kGanttLaneHeight
        << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
    out << "  <text x=\"5\" y=\"" << num(y + kGanttLaneHeight / 2.0 + 4) << "\">M" << q + 1 << "</text>\n";
  }

  for (const auto& row : intervals(sched)) {
    const int label = inst.original_ids[row.job];
    const double x0 = x_of(row.start);
    const double x1 = x_of(row.end);
    const double y = kGanttTopMargin + kGanttLaneHeight * row.machine;
    out << "  <rect class=\"interval\" x=\"" << num(x0) << "\" y=\"" << num(y + 2) << "\" width=\""
        << num(x1 - x0) << "\" height=\"" << kGanttLaneHeight - 4 << "\" fill=\"" << gantt_color(label)
        << "\" stroke=\"#333\"><title>J" << label << " [" << to_token(row.start) << ", "
        << to_token(row.end) << ")</title></rect>\n";
    out << "  <text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(y + kGanttLaneHeight / 2.0 + 4)
        << "\" text-anchor=\"middle\">J" << label << "</text>\n";
  }

  std::set<Rational> releases(inst.releases.begin(), inst.releases.end());
  for (const auto& r : releases) {
    const double x = x_of(r);
    out << "  <line class=\"release\" x1=\"" << num(x) << "\" y1=\"" << kGanttTopMargin - 10 << "\" x2=\""
        << num(x) << "\" y2=\"" << num(lanes_bottom) << "\" stroke=\"#c00\" stroke-dasharray=\"3,3\"/>\n";
    out << "  <text x=\"" << num(x) << "\" y=\"" << kGanttTopMargin - 14 << "\" text-anchor=\"middle\""
        << " fill=\"#c00\">r=" << to_token(r) << "</text>\n";
  }

  const long long ticks = static_cast<long long>(end.convert_to<double>());
  for (long long t = 0; t <= ticks; ++t) {
    out << "  <text x=\"" << num(x_of(Rational(t))) << "\" y=\"" << num(lanes_bottom + 16)
        << "\" text-anchor=\"middle\">" << t << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(const IntervalSchedule& sched, const Instance& inst) {
  long long end = 0;
  for (const auto& pieces : sched.jobs) {
    for (const auto& piece : pieces) {
      if (!is_integer(piece.start) || !is_integer(piece.end)) {
        throw std::domain_error("ASCII rendering needs integer interval endpoints");
      }
      end = std::max(end, to_int64(piece.end));
    }
  }
  std::vector<std::string> lanes(inst.m, std::string(static_cast<std::size_t>(end), '.'));
  for (const auto& row : intervals(sched)) {
    const char c = ascii_label(inst.original_ids[row.job]);
    for (long long t = to_int64(row.start); t < to_int64(row.end); ++t) lanes[row.machine][t] = c;
  }
  std::string out;
  for (int q = 0; q < inst.m; ++q) out += "M" + std::to_string(q + 1) + " |" + lanes[q] + "|\n";
  return out;
}

}  // namespace eqsched
