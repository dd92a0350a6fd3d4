#include "eqsched/structure.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace eqsched {

namespace {

std::string job_text(int j) { return "job " + std::to_string(j + 1); }

std::string block_text(const Block& b) {
  std::string s = "[" + to_token(b.start) + "," + to_token(b.end) + "){";
  for (std::size_t k = 0; k < b.profile.size(); ++k) {
    s += (k ? "," : "") + std::to_string(b.profile[k] + 1);
  }
  return s + "}";
}

bool contains(const std::vector<int>& set, int j) { return std::binary_search(set.begin(), set.end(), j); }

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Rational last_end(const IntervalSchedule& sched) {
  Rational end = 0;
  for (const auto& pieces : sched.jobs) {
    for (const auto& piece : pieces) end = std::max(end, piece.end);
  }
  return end;
}

// Blocks covering every piece, past the horizon if necessary.
std::vector<Block> all_blocks(const IntervalSchedule& sched, const Instance& inst) {
  return flatten(decompose(sched, inst, std::max(inst.horizon(), last_end(sched))));
}

Rational coverage(const std::vector<Piece>& pieces, const Rational& a, const Rational& b) {
  Rational total = 0;
  for (const auto& piece : pieces) {
    const Rational lo = std::max(piece.start, a);
    const Rational hi = std::min(piece.end, b);
    if (lo < hi) total += hi - lo;
  }
  return total;
}

// Moves the parts of `from`'s pieces inside [a, b) to `to`, keeping machines.
void move_window(IntervalSchedule& sched, int from, int to, const Rational& a, const Rational& b) {
  std::vector<Piece> keep;
  for (auto& piece : sched.jobs[from]) {
    const Rational lo = std::max(piece.start, a);
    const Rational hi = std::min(piece.end, b);
    if (!(lo < hi)) {
      keep.push_back(std::move(piece));
      continue;
    }
    if (piece.start < lo) keep.push_back({piece.machine, piece.start, lo});
    if (hi < piece.end) keep.push_back({piece.machine, hi, piece.end});
    sched.jobs[to].push_back({piece.machine, lo, hi});
  }
  sched.jobs[from] = std::move(keep);
}

// Swaps the memberships of jobs i and j on [a, b).
void swap_window(IntervalSchedule& sched, int i, int j, const Rational& a, const Rational& b) {
  const int tmp = sched.job_count();
  sched.jobs.emplace_back();
  move_window(sched, i, tmp, a, b);
  move_window(sched, j, i, a, b);
  move_window(sched, tmp, j, a, b);
  sched.jobs.pop_back();
}

}  // namespace

bool profile_precedes(const std::vector<int>& p, const std::vector<int>& q) {
  auto a = p.begin();
  auto b = q.begin();
  while (a != p.end() && b != q.end() && *a == *b) {
    ++a;
    ++b;
  }
  if (a == p.end()) return b == q.end();  // equal, or p is a proper subset of q
  if (b == q.end()) return true;
  return *a < *b;
}

Verdict is_left_adjusted(const IntervalSchedule& sched, const Instance& inst) {
  const auto bl = all_blocks(sched, inst);
  for (std::size_t a = 0; a < bl.size(); ++a) {
    if (static_cast<int>(bl[a].profile.size()) >= inst.m) continue;
    for (std::size_t b = a + 1; b < bl.size(); ++b) {
      for (int j : bl[b].profile) {
        if (inst.releases[j] <= bl[a].start && !contains(bl[a].profile, j)) {
          return {false, "machine idle during " + block_text(bl[a]) + " while " + job_text(j) +
                             " (released " + to_token(inst.releases[j]) + ") runs later in " +
                             block_text(bl[b])};
        }
      }
    }
  }
  return {};
}

Verdict is_irreducible(const IntervalSchedule& sched, const Instance& inst) {
  if (auto left = is_left_adjusted(sched, inst); !left) {
    return {false, "not left-adjusted: " + left.witness};
  }
  const auto bl = all_blocks(sched, inst);
  for (std::size_t a = 0; a < bl.size(); ++a) {
    for (std::size_t b = a + 1; b < bl.size(); ++b) {
      const auto early = minus(bl[a].profile, bl[b].profile);
      const auto late = minus(bl[b].profile, bl[a].profile);
      if (!early.empty() && !late.empty() && early.back() > late.front()) {
        return {false, job_text(early.back()) + " runs in " + block_text(bl[a]) + " before " +
                           job_text(late.front()) + " in " + block_text(bl[b])};
      }
    }
  }
  return {};
}

Verdict is_normal(const NormalSchedule& ns) {
  const auto n = ns.jobs();
  const auto m = ns.machines();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index q = 0; q < m; ++q) {
      const auto cell = job_text(static_cast<int>(j)) + " machine " + std::to_string(q + 1);
      if (ns.end(j, q) < ns.start(j, q)) return {false, cell + ": end before start"};
      if (j + 1 < n && ns.end(j, q) > ns.start(j + 1, q)) {
        return {false, cell + " ends at " + to_token(ns.end(j, q)) + " after " +
                           job_text(static_cast<int>(j + 1)) + " starts there at " +
                           to_token(ns.start(j + 1, q))};
      }
      if (q > 0 && ns.end(j, q) > ns.start(j, q - 1)) {
        return {false, cell + " ends at " + to_token(ns.end(j, q)) + " after machine " +
                           std::to_string(q) + " starts at " + to_token(ns.start(j, q - 1))};
      }
    }
  }
  return {};
}

Verdict is_normal(const IntervalSchedule& sched, const Instance& inst) {
  const int n = sched.job_count();
  const int m = inst.m;
  std::vector<std::vector<const Piece*>> cell(n, std::vector<const Piece*>(m, nullptr));
  for (int j = 0; j < n; ++j) {
    for (const auto& piece : sched.jobs[j]) {
      if (cell[j][piece.machine]) {
        return {false, job_text(j) + " has two intervals on machine " + std::to_string(piece.machine + 1)};
      }
      cell[j][piece.machine] = &piece;
    }
  }
  // Earliest consistent position for every empty cell; its predecessors are
  // (j-1, q) and (j, q+1).
  std::vector<std::vector<std::optional<Rational>>> finish(n, std::vector<std::optional<Rational>>(m));
  for (int j = 0; j < n; ++j) {
    for (int q = m - 1; q >= 0; --q) {
      std::optional<Rational> lower;
      std::string from;
      const auto raise = [&](const std::optional<Rational>& v, std::string who) {
        if (v && (!lower || *v > *lower)) {
          lower = v;
          from = std::move(who);
        }
      };
      if (j > 0) raise(finish[j - 1][q], job_text(j - 1) + " on machine " + std::to_string(q + 1));
      if (q + 1 < m) raise(finish[j][q + 1], job_text(j) + " on machine " + std::to_string(q + 2));
      if (const Piece* piece = cell[j][q]) {
        if (lower && piece->start < *lower) {
          return {false, job_text(j) + " starts on machine " + std::to_string(q + 1) + " at " +
                             to_token(piece->start) + " before " + from + " ends at " + to_token(*lower)};
        }
        finish[j][q] = piece->end;
      } else {
        finish[j][q] = lower;
      }
    }
  }
  return {};
}

Verdict is_tidy(const IntervalSchedule& sched, const Instance& inst) {
  const Rational horizon = inst.horizon();
  const auto c = completions(sched);
  for (int j = 0; j < sched.job_count(); ++j) {
    if (c[j] > horizon) {
      return {false, job_text(j) + " completes at " + to_token(c[j]) + " after " + to_token(horizon)};
    }
  }
  for (const auto& seg : blocks(sched, inst)) {
    for (std::size_t a = 0; a < seg.blocks.size(); ++a) {
      for (std::size_t b = a + 1; b < seg.blocks.size(); ++b) {
        const auto& s = seg.blocks[a].profile;
        const auto& t = seg.blocks[b].profile;
        if (s != t && profile_precedes(t, s)) {
          return {false, "profile " + block_text(seg.blocks[b]) + " should precede " +
                             block_text(seg.blocks[a])};
        }
      }
    }
  }
  return {};
}

IntervalSchedule exchange_step(const IntervalSchedule& sched, const Instance& inst, int i, int j,
                               const Rational& s, const Rational& t, const Rational& eps) {
  using R = ExchangeError::Reason;
  if (i < 0 || j >= sched.job_count() || j >= inst.n) throw std::out_of_range("exchange_step: job index");
  if (!(i < j)) throw ExchangeError(R::job_order, "exchange_step requires i < j");
  if (!(eps > 0)) throw ExchangeError(R::nonpositive_length, "exchange_step requires eps > 0");
  if (!(s + eps <= t)) throw ExchangeError(R::window_order, "exchange_step requires s + eps <= t");
  if (!(inst.releases[j] <= s)) throw ExchangeError(R::release, "exchange_step requires r_j <= s");
  const Rational s_end = s + eps;
  const Rational t_end = t + eps;
  if (coverage(sched.jobs[j], s, s_end) != eps || coverage(sched.jobs[i], s, s_end) != 0) {
    throw ExchangeError(R::source_window, "[s, s+eps) must be covered by j and free of i");
  }
  if (coverage(sched.jobs[i], t, t_end) != eps || coverage(sched.jobs[j], t, t_end) != 0) {
    throw ExchangeError(R::target_window, "[t, t+eps) must be covered by i and free of j");
  }
  IntervalSchedule out = sched;
  move_window(out, j, i, s, s_end);
  move_window(out, i, j, t, t_end);
  return normalized(std::move(out));
}

IntervalSchedule order_completions(const IntervalSchedule& sched, const Instance& inst) {
  const int n = sched.job_count();
  IntervalSchedule out = sched;
  bool changed = false;
  for (int round = 0;; ++round) {
    const auto c = completions(out);
    int i = -1, j = -1;
    for (int a = 0; a < n && i < 0; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (c[a] > c[b]) {
          i = a;
          j = b;
          break;
        }
      }
    }
    if (i < 0) break;
    if (round >= n * n) throw std::logic_error("order_completions: iteration cap exceeded");

    // f(t) = (work of i in [t, C_i)) - (work of j in [t, C_i)) is piecewise
    // linear, positive just below C_i and zero at the far left. Walk the
    // breakpoints downwards to its first zero below C_i.
    const Rational& ci = c[i];
    std::vector<Rational> points{ci};
    for (int job : {i, j}) {
      for (const auto& piece : out.jobs[job]) {
        if (piece.start < ci) points.push_back(piece.start);
        if (piece.end < ci) points.push_back(piece.end);
      }
    }
    std::sort(points.begin(), points.end(), std::greater<>());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::optional<Rational> cut;
    Rational f = 0;
    for (std::size_t k = 0; k + 1 < points.size() && !cut; ++k) {
      const Rational& hi = points[k];
      const Rational& lo = points[k + 1];
      const Rational len = hi - lo;
      const Rational rate = (coverage(out.jobs[i], lo, hi) - coverage(out.jobs[j], lo, hi)) / len;
      const Rational next = f + rate * len;
      if (rate < 0 && f > 0 && next <= 0) {
        cut = hi - f / (-rate);
      }
      f = next;
    }
    if (!cut) throw std::logic_error("order_completions: no balance point found");
    swap_window(out, i, j, *cut, ci);
    changed = true;
  }
  if (!changed) return out;
  return assign_machines_by_index(out, inst);
}

IntervalSchedule tidify(const IntervalSchedule& sched, const Instance& inst) {
  const auto c = completions(sched);
  const Rational horizon = inst.horizon();
  for (int j = 0; j < sched.job_count(); ++j) {
    if (j > 0 && c[j - 1] > c[j]) throw std::invalid_argument("tidify: completions are not ordered");
    if (c[j] > horizon) throw std::invalid_argument("tidify: completion beyond r_n + n p");
  }
  IntervalSchedule out(sched.job_count(), sched.machines);
  for (const auto& seg : blocks(sched, inst)) {
    std::map<std::vector<int>, Rational> length;
    for (const auto& b : seg.blocks) length[b.profile] += b.length();
    std::vector<std::pair<std::vector<int>, Rational>> order(length.begin(), length.end());
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first != b.first && profile_precedes(a.first, b.first); });
    Rational at = seg.start;
    for (const auto& [profile, len] : order) {
      for (std::size_t k = 0; k < profile.size(); ++k) {
        out.add(profile[k], static_cast<int>(k), at, at + len);
      }
      at += len;
    }
  }
  return normalized(std::move(out));
}

}  // namespace eqsched
