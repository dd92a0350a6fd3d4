#include "eqsched/schedule.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "text_io.hpp"

namespace eqsched {

void IntervalSchedule::add(int job, int machine, Rational start, Rational end) {
  if (job < 0 || job >= job_count()) throw std::out_of_range("job index out of range");
  jobs[job].push_back({machine, std::move(start), std::move(end)});
}

IntervalSchedule normalized(IntervalSchedule sched) {
  for (auto& pieces : sched.jobs) {
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
      if (a.start != b.start) return a.start < b.start;
      return a.machine < b.machine;
    });
    std::vector<Piece> merged;
    merged.reserve(pieces.size());
    for (auto& piece : pieces) {
      if (!merged.empty() && merged.back().machine == piece.machine &&
          merged.back().end == piece.start) {
        merged.back().end = piece.end;
      } else {
        merged.push_back(std::move(piece));
      }
    }
    pieces = std::move(merged);
  }
  return sched;
}

std::vector<Interval> intervals(const IntervalSchedule& sched) {
  std::vector<Interval> rows;
  for (int j = 0; j < sched.job_count(); ++j) {
    for (const auto& piece : sched.jobs[j]) rows.push_back({j, piece.machine, piece.start, piece.end});
  }
  std::sort(rows.begin(), rows.end(), [](const Interval& a, const Interval& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.machine != b.machine) return a.machine < b.machine;
    if (a.job != b.job) return a.job < b.job;
    return a.end < b.end;
  });
  return rows;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const ValidationReport::Check& ValidationReport::at(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + name);
}

namespace {

std::string span_text(const Rational& a, const Rational& b) {
  return "[" + to_token(a) + "," + to_token(b) + ")";
}

bool well_formed(const Piece& piece, int machines) {
  return piece.machine >= 0 && piece.machine < machines && piece.start < piece.end;
}

// Union of a job's pieces on the time axis as sorted disjoint intervals.
std::vector<std::pair<Rational, Rational>> time_union(std::vector<Piece> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.start < b.start; });
  std::vector<std::pair<Rational, Rational>> runs;
  for (const auto& piece : pieces) {
    if (!runs.empty() && piece.start <= runs.back().second) {
      runs.back().second = std::max(runs.back().second, piece.end);
    } else {
      runs.emplace_back(piece.start, piece.end);
    }
  }
  return runs;
}

}  // namespace

ValidationReport validate(const IntervalSchedule& sched, const Instance& inst) {
  using Check = ValidationReport::Check;
  ValidationReport report;
  const int n = std::min(sched.job_count(), inst.n);

  // Well-formed pieces only; malformed ones are reported once and then ignored.
  std::vector<std::vector<Piece>> good(sched.job_count());
  {
    Check check{"intervals", true, {}};
    if (sched.job_count() != inst.n) {
      check.passed = false;
      check.witness = "schedule has " + std::to_string(sched.job_count()) + " jobs, instance has " +
                      std::to_string(inst.n);
    }
    for (int j = 0; j < sched.job_count(); ++j) {
      for (const auto& piece : sched.jobs[j]) {
        if (well_formed(piece, inst.m)) {
          good[j].push_back(piece);
        } else if (check.passed) {
          check.passed = false;
          check.witness = "job " + std::to_string(j + 1) + " machine " +
                          std::to_string(piece.machine + 1) + " " +
                          span_text(piece.start, piece.end) +
                          (piece.start < piece.end ? ": machine out of range" : ": start >= end");
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    Check check{"capacity", true, {}};
    std::map<Rational, int> delta;
    for (int j = 0; j < sched.job_count(); ++j) {
      for (const auto& [a, b] : time_union(good[j])) {
        ++delta[a];
        --delta[b];
      }
    }
    int running = 0;
    for (auto it = delta.begin(); it != delta.end(); ++it) {
      running += it->second;
      if (running > inst.m) {
        const auto next = std::next(it);
        check.passed = false;
        check.witness = std::to_string(running) + " jobs run during " +
                        span_text(it->first, next == delta.end() ? it->first : next->first) +
                        " on " + std::to_string(inst.m) + " machines";
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    Check check{"release", true, {}};
    for (int j = 0; j < n && check.passed; ++j) {
      for (const auto& piece : good[j]) {
        if (piece.start < inst.releases[j]) {
          check.passed = false;
          check.witness = "job " + std::to_string(j + 1) + " runs at t=" + to_token(piece.start) +
                          " < r=" + to_token(inst.releases[j]);
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  // Pieces are finite half-open intervals by construction.
  report.checks.push_back({"finite-intervals", true, {}});

  {
    Check check{"work", true, {}};
    for (int j = 0; j < n; ++j) {
      Rational total = 0;
      for (const auto& piece : good[j]) total += piece.length();
      if (total != inst.p) {
        check.passed = false;
        check.witness = "job " + std::to_string(j + 1) + " runs for " + to_token(total) +
                        ", expected " + to_token(inst.p);
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    Check check{"machine-disjoint", true, {}};
    std::vector<std::vector<std::pair<Piece, int>>> by_machine(inst.m);
    for (int j = 0; j < sched.job_count(); ++j) {
      for (const auto& piece : good[j]) by_machine[piece.machine].emplace_back(piece, j);
    }
    for (int q = 0; q < inst.m && check.passed; ++q) {
      auto& row = by_machine[q];
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first.start < b.first.start; });
      for (std::size_t k = 1; k < row.size(); ++k) {
        if (row[k].first.start < row[k - 1].first.end) {
          check.passed = false;
          check.witness = "machine " + std::to_string(q + 1) + ": job " +
                          std::to_string(row[k - 1].second + 1) + " " +
                          span_text(row[k - 1].first.start, row[k - 1].first.end) +
                          " overlaps job " + std::to_string(row[k].second + 1) + " " +
                          span_text(row[k].first.start, row[k].first.end);
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    Check check{"job-disjoint", true, {}};
    for (int j = 0; j < sched.job_count() && check.passed; ++j) {
      auto row = good[j];
      std::sort(row.begin(), row.end(), [](const Piece& a, const Piece& b) { return a.start < b.start; });
      for (std::size_t k = 1; k < row.size(); ++k) {
        if (row[k].start < row[k - 1].end) {
          check.passed = false;
          check.witness = "job " + std::to_string(j + 1) + " runs twice during " +
                          span_text(row[k].start, std::min(row[k].end, row[k - 1].end));
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  return report;
}

RationalVector completions(const IntervalSchedule& sched) {
  RationalVector out;
  out.reserve(sched.jobs.size());
  for (int j = 0; j < sched.job_count(); ++j) {
    const auto& pieces = sched.jobs[j];
    if (pieces.empty()) throw std::invalid_argument("job " + std::to_string(j + 1) + " has no intervals");
    Rational c = pieces.front().end;
    for (const auto& piece : pieces) c = std::max(c, piece.end);
    out.push_back(std::move(c));
  }
  return out;
}

Rational total_completion(const IntervalSchedule& sched) {
  const auto c = completions(sched);
  return std::accumulate(c.begin(), c.end(), Rational(0));
}

std::vector<int> preemption_counts(const IntervalSchedule& sched) {
  std::vector<int> out;
  out.reserve(sched.jobs.size());
  for (const auto& pieces : sched.jobs) {
    out.push_back(pieces.empty() ? 0 : static_cast<int>(time_union(pieces).size()) - 1);
  }
  return out;
}

std::vector<int> migration_counts(const IntervalSchedule& sched) {
  std::vector<int> out;
  out.reserve(sched.jobs.size());
  for (auto pieces : sched.jobs) {
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.start < b.start; });
    int count = 0;
    for (std::size_t k = 1; k < pieces.size(); ++k) {
      if (pieces[k - 1].end == pieces[k].start && pieces[k - 1].machine != pieces[k].machine) ++count;
    }
    out.push_back(count);
  }
  return out;
}

RationalVector halfway_vector(const IntervalSchedule& sched) {
  RationalVector out;
  out.reserve(sched.jobs.size());
  for (const auto& pieces : sched.jobs) {
    Rational h = 0;
    for (const auto& piece : pieces) h += (piece.end * piece.end - piece.start * piece.start) / 4;
    out.push_back(std::move(h));
  }
  return out;
}

std::strong_ordering lex_compare(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lex_compare: length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return std::strong_ordering::less;
    if (b[k] < a[k]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::vector<Segment> decompose(const IntervalSchedule& sched, const Instance& inst,
                               const Rational& end) {
  if (end <= inst.releases.back()) throw std::invalid_argument("decompose: end must exceed r_n");

  // Segment boundaries: distinct release values, then `end`.
  std::vector<Rational> bounds;
  Rational earliest = inst.releases.front();
  for (const auto& pieces : sched.jobs) {
    for (const auto& piece : pieces) earliest = std::min(earliest, piece.start);
  }
  if (earliest < inst.releases.front()) bounds.push_back(earliest);
  for (const auto& r : inst.releases) {
    if (bounds.empty() || bounds.back() != r) bounds.push_back(r);
  }
  bounds.push_back(end);

  // Start/end events per job; a job can abut itself across machines, so
  // membership is a counter rather than a flag.
  std::map<Rational, std::vector<std::pair<int, int>>> events;
  for (int j = 0; j < sched.job_count(); ++j) {
    for (const auto& piece : sched.jobs[j]) {
      events[piece.start].emplace_back(j, +1);
      events[piece.end].emplace_back(j, -1);
    }
  }
  std::vector<Rational> points(bounds.begin(), bounds.end());
  for (const auto& [t, _] : events) {
    if (t > bounds.front() && t < end) points.push_back(t);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<Segment> segments;
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) segments.push_back({bounds[k], bounds[k + 1], {}});

  std::vector<int> active(sched.job_count(), 0);
  auto ev = events.begin();
  std::size_t seg = 0;
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const Rational& a = points[k];
    for (; ev != events.end() && ev->first <= a; ++ev) {
      for (const auto& [job, d] : ev->second) active[job] += d;
    }
    std::vector<int> profile;
    for (int j = 0; j < sched.job_count(); ++j) {
      if (active[j] > 0) profile.push_back(j);
    }
    while (segments[seg].end <= a) ++seg;
    auto& blocks_here = segments[seg].blocks;
    if (!blocks_here.empty() && blocks_here.back().profile == profile) {
      blocks_here.back().end = points[k + 1];
    } else {
      blocks_here.push_back({a, points[k + 1], std::move(profile)});
    }
  }
  return segments;
}

std::vector<Segment> blocks(const IntervalSchedule& sched, const Instance& inst) {
  const Rational horizon = inst.horizon();
  for (const auto& c : completions(sched)) {
    if (c > horizon) {
      throw std::invalid_argument("completion " + to_token(c) + " beyond horizon " + to_token(horizon));
    }
  }
  return decompose(sched, inst, horizon);
}

std::vector<Block> flatten(const std::vector<Segment>& segments) {
  std::vector<Block> out;
  for (const auto& seg : segments) out.insert(out.end(), seg.blocks.begin(), seg.blocks.end());
  return out;
}

IntervalSchedule assign_machines_by_index(const IntervalSchedule& sched, const Instance& inst) {
  Rational end = inst.releases.back() + 1;
  for (const auto& pieces : sched.jobs) {
    for (const auto& piece : pieces) end = std::max(end, piece.end);
  }
  IntervalSchedule out(sched.job_count(), sched.machines);
  for (const auto& block : flatten(decompose(sched, inst, end))) {
    for (std::size_t k = 0; k < block.profile.size(); ++k) {
      out.add(block.profile[k], static_cast<int>(k), block.start, block.end);
    }
  }
  return normalized(std::move(out));
}

IntervalSchedule to_input_order(const IntervalSchedule& sched, const Instance& inst) {
  IntervalSchedule out(sched.job_count(), sched.machines);
  for (int j = 0; j < sched.job_count(); ++j) out.jobs[inst.original_ids[j] - 1] = sched.jobs[j];
  return out;
}

IntervalSchedule from_input_order(const IntervalSchedule& sched, const Instance& inst) {
  if (sched.job_count() != inst.n) throw std::invalid_argument("schedule and instance job counts differ");
  IntervalSchedule out(sched.job_count(), sched.machines);
  for (int j = 0; j < sched.job_count(); ++j) out.jobs[j] = sched.jobs[inst.original_ids[j] - 1];
  return out;
}

IntervalSchedule parse_schedule(std::istream& in) {
  using text_io::parse_count;
  using text_io::parse_value;
  text_io::LineReader reader(in);
  std::vector<text_io::Token> toks;

  if (!reader.next(toks)) throw ParseError(reader.number(), 0, "missing header line");
  if (toks.size() != 2 || toks[0].text != "eqsched-schedule" || toks[1].text != "v1") {
    throw ParseError(reader.number(), 1, "expected header 'eqsched-schedule v1'");
  }
  if (!reader.next(toks)) throw ParseError(reader.number(), 0, "missing '<n> <m>' line");
  if (toks.size() != 2) throw ParseError(reader.number(), 1, "expected '<n> <m>'");
  const int n = parse_count(toks[0], reader.number(), "n");
  const int m = parse_count(toks[1], reader.number(), "m");
  if (n < 1 || m < 1) throw ParseError(reader.number(), 1, "n and m must be at least 1");

  IntervalSchedule sched(n, m);
  while (reader.next(toks)) {
    const int line = reader.number();
    if (toks.size() != 4) throw ParseError(line, 1, "expected '<job> <machine> <start> <end>'");
    const int job = parse_count(toks[0], line, "job");
    const int machine = parse_count(toks[1], line, "machine");
    if (job < 1 || job > n) throw ParseError(line, toks[0].column, "job index out of range");
    if (machine < 1 || machine > m) throw ParseError(line, toks[1].column, "machine index out of range");
    Rational start = parse_value(toks[2], line, "start");
    Rational end = parse_value(toks[3], line, "end");
    sched.add(job - 1, machine - 1, std::move(start), std::move(end));
  }
  return sched;
}

IntervalSchedule parse_schedule_text(const std::string& text) {
  std::istringstream in(text);
  return parse_schedule(in);
}

void write_schedule(std::ostream& out, const IntervalSchedule& sched) {
  out << "eqsched-schedule v1\n" << sched.job_count() << ' ' << sched.machines << '\n';
  for (const auto& row : intervals(sched)) {
    out << row.job + 1 << ' ' << row.machine + 1 << ' ' << to_token(row.start) << ' '
        << to_token(row.end) << '\n';
  }
}

std::string schedule_text(const IntervalSchedule& sched) {
  std::ostringstream out;
  write_schedule(out, sched);
  return out.str();
}

}  // namespace eqsched
