#include <doctest.h>

#include "eqsched/structure.hpp"
#include "support/random_schedule.hpp"

using namespace eqsched;
using eqsched::testing::find_exchange;
using eqsched::testing::random_case;
using eqsched::testing::RandomCaseBounds;

namespace {

Rational R(long long a, long long b = 1) { return Rational(a, b); }

Instance inst_of(int m, int p, std::vector<int> r) {
  RationalVector rs;
  for (int x : r) rs.emplace_back(x);
  return Instance::make(m, Rational(p), rs);
}

ExchangeError::Reason reason_of(const IntervalSchedule& s, const Instance& inst, int i, int j, Rational a,
                                Rational b, Rational eps) {
  try {
    exchange_step(s, inst, i, j, a, b, eps);
  } catch (const ExchangeError& e) {
    return e.reason();
  }
  FAIL("no ExchangeError");
  return ExchangeError::Reason::job_order;
}

int count_below(const std::vector<int>& set, int k) {
  return static_cast<int>(std::count_if(set.begin(), set.end(), [k](int i) { return i < k; }));
}

int count_above(const std::vector<int>& set, int k) {
  return static_cast<int>(std::count_if(set.begin(), set.end(), [k](int i) { return i > k; }));
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("left-adjusted") {
  const Instance inst = inst_of(1, 1, {0});
  IntervalSchedule late(1, 1);
  late.add(0, 0, R(1), R(2));
  const Verdict v = is_left_adjusted(late, inst);
  CHECK_FALSE(v.holds);
  CHECK_FALSE(v.witness.empty());
  IntervalSchedule early(1, 1);
  early.add(0, 0, R(0), R(1));
  CHECK(is_left_adjusted(early, inst));
}

TEST_CASE("irreducible on two single-machine orders") {
  const Instance inst = inst_of(1, 1, {0, 0});
  IntervalSchedule forward(2, 1);
  forward.add(0, 0, R(0), R(1));
  forward.add(1, 0, R(1), R(2));
  CHECK(is_irreducible(forward, inst));
  IntervalSchedule swapped(2, 1);
  swapped.add(1, 0, R(0), R(1));
  swapped.add(0, 0, R(1), R(2));
  const Verdict v = is_irreducible(swapped, inst);
  CHECK_FALSE(v.holds);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("nested profiles satisfy the irreducibility condition") {
  // {1} on [0,1/2) then {1,2} on [1/2,1): X(s) is a subset of X(t).
  const Instance inst = Instance::make(2, R(1), {R(0), R(1, 2)});
  IntervalSchedule s(2, 2);
  s.add(0, 0, R(0), R(1));
  s.add(1, 1, R(1, 2), R(3, 2));
  CHECK(is_irreducible(s, inst));
}

TEST_CASE("normal: single job down the machines") {
  const Instance inst = inst_of(3, 3, {0});
  IntervalSchedule s(1, 3);
  s.add(0, 2, R(0), R(1));
  s.add(0, 1, R(1), R(2));
  s.add(0, 0, R(2), R(3));
  CHECK(is_normal(s, inst));
}

TEST_CASE("normal: job 2 before job 1 on machine 1 fails") {
  const Instance inst = inst_of(1, 1, {0, 0});
  IntervalSchedule s(2, 1);
  s.add(1, 0, R(0), R(1));
  s.add(0, 0, R(1), R(2));
  CHECK_FALSE(is_normal(s, inst));
}

TEST_CASE("normal: two pieces of one job on one machine fail") {
  const Instance inst = inst_of(1, 2, {0, 0});
  IntervalSchedule s(2, 1);
  s.add(0, 0, R(0), R(1));
  s.add(1, 0, R(1), R(3));
  s.add(0, 0, R(3), R(4));
  const Verdict v = is_normal(s, inst);
  CHECK_FALSE(v.holds);
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("normal: matrix form conditions") {
  NormalSchedule ns(2, 2);
  // Job 1: M2 [0,1), M1 [1,2). Job 2: M2 [1,2), M1 [2,3).
  ns.start << 1, 0, 2, 1;
  ns.end << 2, 1, 3, 2;
  CHECK(is_normal(ns));
  NormalSchedule broken = ns;
  broken.start(1, 0) = R(3, 2);  // job 2 starts on M1 before job 1 ends there
  CHECK_FALSE(is_normal(broken));
  NormalSchedule cross = ns;
  cross.end(0, 1) = R(3, 2);  // job 1 still on M2 after it starts on M1
  CHECK_FALSE(is_normal(cross));
}

TEST_CASE("tidy predicate") {
  const Instance inst = Instance::make(2, R(1), {R(0), R(0)});
  IntervalSchedule tidy(2, 2);
  tidy.add(0, 0, R(0), R(1));
  tidy.add(1, 1, R(0), R(1, 2));
  tidy.add(1, 1, R(3, 2), R(2));
  // [0,1/2) {1,2}, [1/2,1) {1}, [1,3/2) idle, [3/2,2) {2}: the idle block is out of place.
  CHECK_FALSE(is_tidy(tidy, inst));

  IntervalSchedule good(2, 2);
  good.add(0, 0, R(0), R(1));
  good.add(1, 1, R(0), R(1, 2));
  good.add(1, 0, R(1), R(3, 2));
  CHECK(is_tidy(good, inst));

  IntervalSchedule bad(2, 2);
  bad.add(0, 0, R(0), R(1));
  bad.add(1, 1, R(1, 2), R(3, 2));
  // {1} before {1,2}.
  CHECK_FALSE(is_tidy(bad, inst));
}

TEST_CASE("profile comparator") {
  CHECK(profile_precedes({0, 1}, {0}));
  CHECK_FALSE(profile_precedes({0}, {0, 1}));
  CHECK(profile_precedes({0}, {1}));
  CHECK(profile_precedes({2}, {}));
  CHECK_FALSE(profile_precedes({}, {2}));
  CHECK(profile_precedes({1, 2}, {1, 2}));
}

TEST_CASE("exchange step on a swapped pair") {
  const Instance inst = inst_of(1, 1, {0, 0});
  IntervalSchedule s(2, 1);
  s.add(1, 0, R(0), R(1));
  s.add(0, 0, R(1), R(2));
  const auto out = exchange_step(s, inst, 0, 1, R(0), R(1), R(1));
  IntervalSchedule want(2, 1);
  want.add(0, 0, R(0), R(1));
  want.add(1, 0, R(1), R(2));
  CHECK(out == normalized(want));
  CHECK(halfway_vector(s)[0] - halfway_vector(out)[0] == R(1, 2));
}

TEST_CASE("exchange step on thin windows moves only the windows") {
  const Instance inst = inst_of(1, 1, {0, 0});
  IntervalSchedule s(2, 1);
  s.add(1, 0, R(0), R(1));
  s.add(0, 0, R(1), R(2));
  const auto out = exchange_step(s, inst, 0, 1, R(1, 3), R(4, 3), R(1, 3));
  CHECK(validate(out, inst).ok());
  REQUIRE(out.jobs[0].size() == 3);
  CHECK(out.jobs[0][0].start == R(1, 3));
  CHECK(out.jobs[0][0].end == R(2, 3));
  CHECK(out.jobs[0][1].start == R(1));
  CHECK(out.jobs[0][1].end == R(4, 3));
  CHECK(out.jobs[1].size() == 3);
  CHECK(completions(out)[0] == 2);
  const auto h0 = halfway_vector(s);
  const auto h1 = halfway_vector(out);
  CHECK(h0[0] - h1[0] == R(1) * R(1, 3) / 2);
}

TEST_CASE("exchange step precondition failures are distinct") {
  const Instance inst = Instance::make(1, R(1), {R(0), R(1, 2)});
  IntervalSchedule s(2, 1);
  s.add(1, 0, R(1, 2), R(3, 2));
  s.add(0, 0, R(3, 2), R(5, 2));
  using Reason = ExchangeError::Reason;
  CHECK(reason_of(s, inst, 1, 0, R(1), R(2), R(1, 2)) == Reason::job_order);
  CHECK(reason_of(s, inst, 0, 1, R(1), R(2), R(0)) == Reason::nonpositive_length);
  CHECK(reason_of(s, inst, 0, 1, R(1), R(5, 4), R(1, 2)) == Reason::window_order);
  CHECK(reason_of(s, inst, 0, 1, R(0), R(2), R(1, 2)) == Reason::release);
  CHECK(reason_of(s, inst, 0, 1, R(1), R(7, 4), R(3, 4)) == Reason::source_window);
  CHECK(reason_of(s, inst, 0, 1, R(1, 2), R(1), R(1, 2)) == Reason::target_window);
  CHECK_THROWS_AS(exchange_step(s, inst, 0, 5, R(1), R(2), R(1)), std::out_of_range);
}

TEST_CASE("exchange step lexicographically decreases H") {
  boost::random::mt19937_64 rng(21);
  int pulls = 0;
  for (int trial = 0; pulls < 100 && trial < 5000; ++trial) {
    const auto rc = random_case(rng);
    const auto w = find_exchange(rc, rng);
    if (!w) continue;
    ++pulls;
    const auto out = exchange_step(rc.sched, rc.inst, w->i, w->j, w->s, w->t, w->eps);
    CHECK(validate(out, rc.inst).ok());
    const auto before = halfway_vector(rc.sched);
    const auto after = halfway_vector(out);
    CHECK(lex_compare(after, before) == std::strong_ordering::less);
    CHECK(before[w->i] - after[w->i] == (w->t - w->s) * w->eps / 2);
    for (int k = 0; k < w->i; ++k) CHECK(after[k] == before[k]);
  }
  CHECK(pulls == 100);
}

TEST_CASE("order_completions on an ordered schedule is the identity") {
  const Instance inst = inst_of(1, 1, {0, 0});
  IntervalSchedule s(2, 1);
  s.add(0, 0, R(0), R(1));
  s.add(1, 0, R(1), R(2));
  CHECK(order_completions(s, inst) == s);
}

TEST_CASE("order_completions swaps a fully inverted pair") {
  const Instance inst = inst_of(1, 1, {0, 0});
  IntervalSchedule s(2, 1);
  s.add(1, 0, R(0), R(1));
  s.add(0, 0, R(1), R(2));
  const auto out = order_completions(s, inst);
  IntervalSchedule want(2, 1);
  want.add(0, 0, R(0), R(1));
  want.add(1, 0, R(1), R(2));
  CHECK(out == want);
  CHECK(total_completion(out) == 3);
}

TEST_CASE("order_completions contract on random schedules") {
  boost::random::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rc = random_case(rng);
    const auto out = order_completions(rc.sched, rc.inst);
    CHECK(validate(out, rc.inst).ok());
    const auto c = completions(out);
    CHECK(std::is_sorted(c.begin(), c.end()));
    CHECK(total_completion(out) <= total_completion(rc.sched));
  }
}

TEST_CASE("tidify reorders blocks inside a segment") {
  const Instance inst = Instance::make(2, R(1), {R(0), R(0)});
  IntervalSchedule s(2, 2);
  s.add(0, 0, R(0), R(1));
  s.add(1, 1, R(1, 2), R(3, 2));
  CHECK_FALSE(is_tidy(s, inst));
  const auto out = tidify(s, inst);
  CHECK(is_tidy(out, inst));
  CHECK(validate(out, inst).ok());
  const auto blocks_out = flatten(blocks(out, inst));
  REQUIRE(blocks_out.size() >= 2);
  CHECK(blocks_out[0].profile == std::vector<int>{0, 1});
  CHECK(blocks_out[0].end == R(1, 2));
  CHECK(blocks_out[1].profile == std::vector<int>{0});
  CHECK(completions(out) == RationalVector{R(1), R(3, 2)});
}

TEST_CASE("tidify rejects unordered completions") {
  const Instance inst = inst_of(1, 1, {0, 0});
  IntervalSchedule s(2, 1);
  s.add(1, 0, R(0), R(1));
  s.add(0, 0, R(1), R(2));
  CHECK_THROWS_AS(tidify(s, inst), std::invalid_argument);
}

TEST_CASE("tidify contract on random ordered schedules") {
  boost::random::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rc = random_case(rng);
    const auto ordered = order_completions(rc.sched, rc.inst);
    const auto out = tidify(ordered, rc.inst);
    CHECK(validate(out, rc.inst).ok());
    CHECK(is_tidy(out, rc.inst));
    const auto before = completions(ordered);
    const auto after = completions(out);
    for (int j = 0; j < rc.inst.n; ++j) CHECK(after[j] <= before[j]);
    CHECK(lex_compare(halfway_vector(out), halfway_vector(ordered)) != std::strong_ordering::greater);
    // Idempotent on tidy input.
    CHECK(tidify(out, rc.inst) == out);
  }
}

TEST_CASE("lowest-index schedules are irreducible and normal") {
  boost::random::mt19937_64 rng(51);
  RandomCaseBounds bounds;
  bounds.lowest_index = true;
  for (int trial = 0; trial < 200; ++trial) {
    const auto rc = random_case(rng, bounds);
    CHECK(is_irreducible(rc.sched, rc.inst));
    CHECK(is_normal(assign_machines_by_index(rc.sched, rc.inst), rc.inst));
  }
}

TEST_CASE("irreducible implies normal on random schedules") {
  boost::random::mt19937_64 rng(52);
  int irreducible = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rc = random_case(rng);
    if (!is_irreducible(rc.sched, rc.inst)) continue;
    ++irreducible;
    CHECK(is_normal(assign_machines_by_index(rc.sched, rc.inst), rc.inst));
  }
  CHECK(irreducible > 0);
}

TEST_CASE("earlier lower-index jobs do not lose ground later in irreducible schedules") {
  boost::random::mt19937_64 rng(53);
  RandomCaseBounds bounds;
  bounds.lowest_index = true;
  for (int trial = 0; trial < 200; ++trial) {
    const auto rc = random_case(rng, bounds);
    REQUIRE(is_irreducible(rc.sched, rc.inst));
    const auto all = flatten(blocks(rc.sched, rc.inst));
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = a + 1; b < all.size(); ++b) {
        const auto& xu = all[a].profile;
        const auto& xt = all[b].profile;
        for (int k : xu) {
          if (!std::binary_search(xt.begin(), xt.end(), k) || rc.inst.releases[k] > all[a].start) continue;
          CHECK(count_below(xt, k) <= count_below(xu, k));
          CHECK(count_above(xt, k) >= count_above(xu, k));
        }
      }
    }
  }
}

}  // TEST_SUITE
