#include "eqsched/oracle.hpp"

#include <bit>
#include <limits>
#include <string>

namespace eqsched {

namespace {

constexpr long long kInfeasible = std::numeric_limits<long long>::max() / 4;

// Remaining work per job encoded in mixed radix (p + 1); job j has weight
// (p + 1)^j.
class Recurrence {
 public:
  Recurrence(const Instance& inst, const OracleOptions& options)
      : n_(inst.n), m_(inst.m), nonpreemptive_(options.nonpreemptive) {
    if (!inst.all_integer()) throw std::domain_error("oracle requires integer p and release times");
    if (n_ > 30) throw OracleCapExceeded("oracle supports at most 30 jobs");
    p_ = to_int64(inst.p);
    for (const auto& r : inst.releases) releases_.push_back(to_int64(r));
    const long double horizon = static_cast<long double>(releases_.back()) + static_cast<long double>(n_) * p_;
    long double states = 1;
    for (int j = 0; j < n_; ++j) states *= static_cast<long double>(p_ + 1);
    const long double transitions = horizon * states * static_cast<long double>(1ULL << n_);
    if (transitions > static_cast<long double>(options.transition_cap)) {
      throw OracleCapExceeded("oracle needs about " + std::to_string(static_cast<double>(transitions)) +
                              " transitions, cap is " + std::to_string(options.transition_cap));
    }
    horizon_ = static_cast<int>(horizon);
    states_ = static_cast<std::uint64_t>(states);
    weight_.resize(n_);
    std::uint64_t w = 1;
    for (int j = 0; j < n_; ++j, w *= static_cast<std::uint64_t>(p_ + 1)) weight_[j] = w;
  }

  int horizon() const { return horizon_; }
  std::uint64_t states() const { return states_; }
  std::uint64_t full() const { return states_ - 1; }

  long long remaining(std::uint64_t state, int j) const {
    return static_cast<long long>((state / weight_[j]) % static_cast<std::uint64_t>(p_ + 1));
  }

  // Calls visit(mask, next_state, cost) for every legal choice at slot t, in
  // increasing mask order.
  template <typename Visit>
  void for_each_choice(int t, std::uint64_t state, Visit&& visit) const {
    std::uint32_t avail = 0, started = 0, finishing = 0;
    for (int j = 0; j < n_; ++j) {
      const long long rem = remaining(state, j);
      if (rem == 0 || releases_[j] > t) continue;
      avail |= 1u << j;
      if (rem < p_) started |= 1u << j;
      if (rem == 1) finishing |= 1u << j;
    }
    std::uint32_t sub = 0;
    do {
      if (std::popcount(sub) <= m_ && (!nonpreemptive_ || (sub & started) == started)) {
        std::uint64_t next = state;
        for (std::uint32_t bits = sub; bits; bits &= bits - 1) next -= weight_[std::countr_zero(bits)];
        const long long cost = static_cast<long long>(std::popcount(sub & finishing)) * (t + 1);
        visit(sub, next, cost);
      }
      sub = (sub - avail) & avail;
    } while (sub != 0);
  }

 private:
  int n_;
  int m_;
  bool nonpreemptive_;
  long long p_ = 0;
  std::vector<long long> releases_;
  int horizon_ = 0;
  std::uint64_t states_ = 0;
  std::vector<std::uint64_t> weight_;
};

long long recurse(const Recurrence& rec, int t, std::uint64_t state) {
  if (state == 0) return 0;
  if (t == rec.horizon()) return kInfeasible;
  long long best = kInfeasible;
  rec.for_each_choice(t, state, [&](std::uint32_t, std::uint64_t next, long long cost) {
    const long long rest = recurse(rec, t + 1, next);
    if (rest < kInfeasible) best = std::min(best, cost + rest);
  });
  return best;
}

}  // namespace

OracleResult dp_optimum(const Instance& inst, const OracleOptions& options) {
  const Recurrence rec(inst, options);
  const int horizon = rec.horizon();
  OracleResult result;
  result.schedule.horizon = horizon;
  result.schedule.slots.assign(horizon, {});

  if (!options.memoize) {
    result.objective = recurse(rec, 0, rec.full());
    if (result.objective >= kInfeasible) throw std::logic_error("oracle: no schedule within the horizon");
    return result;
  }

  // value[t][s]: least cost of finishing from state s at the start of slot t.
  const std::uint64_t states = rec.states();
  std::vector<std::vector<long long>> value(horizon + 1, std::vector<long long>(states, kInfeasible));
  value[horizon][0] = 0;
  for (int t = horizon - 1; t >= 0; --t) {
    value[t][0] = 0;
    for (std::uint64_t s = 1; s < states; ++s) {
      long long best = kInfeasible;
      rec.for_each_choice(t, s, [&](std::uint32_t, std::uint64_t next, long long cost) {
        const long long rest = value[t + 1][next];
        if (rest < kInfeasible) best = std::min(best, cost + rest);
      });
      value[t][s] = best;
    }
  }
  result.objective = value[0][rec.full()];
  if (result.objective >= kInfeasible) throw std::logic_error("oracle: no schedule within the horizon");

  std::uint64_t state = rec.full();
  for (int t = 0; t < horizon && state != 0; ++t) {
    bool found = false;
    std::uint32_t chosen = 0;
    std::uint64_t chosen_next = 0;
    rec.for_each_choice(t, state, [&](std::uint32_t mask, std::uint64_t next, long long cost) {
      if (!found && value[t + 1][next] < kInfeasible && cost + value[t + 1][next] == value[t][state]) {
        found = true;
        chosen = mask;
        chosen_next = next;
      }
    });
    if (!found) throw std::logic_error("oracle: reconstruction failed");
    for (int j = 0; j < inst.n; ++j) {
      if (chosen & (1u << j)) result.schedule.slots[t].push_back(j);
    }
    state = chosen_next;
  }
  return result;
}

IntervalSchedule slot_to_interval(const SlotSchedule& ss, const Instance& inst) {
  IntervalSchedule out(inst.n, inst.m);
  for (int t = 0; t < ss.horizon; ++t) {
    for (std::size_t k = 0; k < ss.slots[t].size(); ++k) {
      out.add(ss.slots[t][k], static_cast<int>(k), Rational(t), Rational(t + 1));
    }
  }
  return normalized(std::move(out));
}

}  // namespace eqsched
