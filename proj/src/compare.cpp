#include "eqsched/compare.hpp"

#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "eqsched/normal_lp.hpp"
#include "eqsched/oracle.hpp"

namespace eqsched {

InstanceCheck check_instance(const Instance& inst, const CompareOptions& options) {
  InstanceCheck rec;
  rec.instance = inst;

  try {
    const SolveReport report = solve(inst);
    rec.lp_objective = report.objective;
    rec.pivots = report.lp.pivots;
    rec.preemptions = preemption_counts(report.schedule);
    for (const auto& check : report.validation.checks) {
      if (!check.passed) rec.failures.push_back(check.name + ": " + check.witness);
    }
    const int total = std::accumulate(rec.preemptions.begin(), rec.preemptions.end(), 0);
    if (total > inst.n * (inst.m - 1)) rec.failures.push_back("total preemptions " + std::to_string(total));
  } catch (const SolverAnomaly& e) {
    rec.failures.push_back(std::string("solver anomaly: ") + e.what());
    return rec;
  }

  try {
    OracleOptions oracle{false, options.transition_cap, true};
    rec.dp_objective = dp_optimum(inst, oracle).objective;
    if (options.nonpreemptive) {
      oracle.nonpreemptive = true;
      rec.dp_nonpreemptive = dp_optimum(inst, oracle).objective;
    }
  } catch (const OracleCapExceeded& e) {
    rec.skipped = e.what();
    return rec;
  }

  if (rec.lp_objective != Rational(*rec.dp_objective)) {
    rec.failures.push_back("objective mismatch");
  }
  if (rec.dp_nonpreemptive && *rec.dp_objective > *rec.dp_nonpreemptive) {
    rec.failures.push_back("preemptive optimum exceeds nonpreemptive optimum");
  }
  return rec;
}

CompareSummary run_compare(const std::vector<Instance>& instances, const CompareOptions& options) {
  CompareSummary summary;
  summary.records.resize(instances.size());

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t k = next++; k < instances.size(); k = next++) {
      summary.records[k] = check_instance(instances[k], options);
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  for (const auto& rec : summary.records) {
    summary.max_pivots = std::max(summary.max_pivots, rec.pivots);
    for (int count : rec.preemptions) ++summary.preemption_histogram[count];
    if (rec.skipped) {
      ++summary.skipped;
    } else {
      ++summary.instances_checked;
      if (rec.dp_nonpreemptive) {
        if (*rec.dp_objective < *rec.dp_nonpreemptive) ++summary.nonpreemptive_strict;
        else ++summary.nonpreemptive_equal;
      }
    }
    if (!rec.failures.empty()) {
      std::string reason;
      for (const auto& f : rec.failures) reason += (reason.empty() ? "" : "; ") + f;
      summary.mismatches.push_back({describe(rec.instance), to_token(rec.lp_objective),
                                    rec.dp_objective ? std::to_string(*rec.dp_objective) : "-", reason});
    }
  }
  return summary;
}

std::vector<Instance> random_instances(int count, std::uint64_t seed, int n_max, int m_max, int p_max,
                                       int r_max) {
  if (count < 0) throw std::invalid_argument("count must be nonnegative");
  boost::random::mt19937_64 rng(seed);
  boost::random::uniform_int_distribution<int> n_dist(1, std::max(1, n_max));
  boost::random::uniform_int_distribution<int> m_dist(1, std::max(1, m_max));
  std::vector<Instance> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    GenParams params;
    params.n = n_dist(rng);
    params.m = m_dist(rng);
    params.p_max = p_max;
    params.r_max = r_max;
    params.seed = rng();
    out.push_back(generate_instance(params));
  }
  return out;
}

std::string summary_text(const CompareSummary& summary, bool per_instance) {
  std::ostringstream out;
  if (per_instance) {
    for (const auto& rec : summary.records) {
      out << describe(rec.instance) << " lp=" << to_token(rec.lp_objective);
      if (rec.skipped) {
        out << " skipped (" << *rec.skipped << ")";
      } else {
        out << " dp=" << *rec.dp_objective;
        if (rec.dp_nonpreemptive) {
          out << " nonpreemptive=" << *rec.dp_nonpreemptive
              << (*rec.dp_objective < *rec.dp_nonpreemptive ? " strict" : " equal");
        }
      }
      out << (rec.failures.empty() ? " ok" : " FAIL") << '\n';
    }
  }
  out << "instances checked " << summary.instances_checked << '\n';
  out << "instances skipped " << summary.skipped << '\n';
  out << "mismatches " << summary.mismatches.size() << '\n';
  for (const auto& mm : summary.mismatches) {
    out << "  " << mm.instance << " lp=" << mm.lp << " dp=" << mm.dp << " (" << mm.reason << ")\n";
  }
  out << "max pivots " << summary.max_pivots << '\n';
  out << "preemptions per job:";
  for (const auto& [count, jobs] : summary.preemption_histogram) out << ' ' << count << ':' << jobs;
  out << '\n';
  if (summary.nonpreemptive_strict + summary.nonpreemptive_equal > 0) {
    out << "preemption strictly helps on " << summary.nonpreemptive_strict << " instances, ties on "
        << summary.nonpreemptive_equal << '\n';
  }
  return out.str();
}

}  // namespace eqsched
