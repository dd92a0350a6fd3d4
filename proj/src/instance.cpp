#include "eqsched/instance.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "text_io.hpp"

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

namespace eqsched {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) +
                         (column > 0 ? ", column " + std::to_string(column) : std::string{}) +
                         ": " + message),
      line_(line),
      column_(column) {}

Instance Instance::make(int machines, Rational processing, RationalVector releases) {
  if (releases.empty()) throw std::invalid_argument("instance needs at least one job");
  if (machines < 1) throw std::invalid_argument("instance needs at least one machine");
  if (processing <= 0) throw std::invalid_argument("processing time must be positive");
  for (const auto& r : releases) {
    if (r < 0) throw std::invalid_argument("release time is negative: " + to_token(r));
  }

  Instance inst;
  inst.n = static_cast<int>(releases.size());
  inst.m = machines;
  inst.p = std::move(processing);

  std::vector<int> order(releases.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return releases[a] < releases[b]; });
  inst.releases.reserve(releases.size());
  inst.original_ids.reserve(releases.size());
  for (int k : order) {
    inst.releases.push_back(releases[k]);
    inst.original_ids.push_back(k + 1);
  }
  return inst;
}

Rational Instance::horizon() const { return releases.back() + Rational(n) * p; }

bool Instance::all_integer() const {
  return is_integer(p) &&
         std::all_of(releases.begin(), releases.end(), [](const Rational& r) { return is_integer(r); });
}

bool operator==(const Instance& a, const Instance& b) {
  return a.n == b.n && a.m == b.m && a.p == b.p && a.releases == b.releases;
}

using text_io::LineReader;
using text_io::Token;
using text_io::parse_count;
using text_io::parse_value;

Instance parse_instance(std::istream& in) {
  LineReader reader(in);
  std::vector<Token> toks;

  if (!reader.next(toks)) throw ParseError(reader.number(), 0, "missing header line");
  if (toks.size() != 2 || toks[0].text != "eqsched-instance" || toks[1].text != "v1") {
    throw ParseError(reader.number(), 1, "expected header 'eqsched-instance v1'");
  }

  if (!reader.next(toks)) throw ParseError(reader.number(), 0, "missing '<n> <m>' line");
  if (toks.size() != 2) throw ParseError(reader.number(), 1, "expected '<n> <m>'");
  const int count_line = reader.number();
  const int n = parse_count(toks[0], count_line, "n");
  const int m = parse_count(toks[1], count_line, "m");
  if (n < 1) throw ParseError(count_line, toks[0].column, "n must be at least 1");
  if (m < 1) throw ParseError(count_line, toks[1].column, "m must be at least 1");

  if (!reader.next(toks)) throw ParseError(reader.number(), 0, "missing processing time line");
  if (toks.size() != 1) throw ParseError(reader.number(), 1, "expected a single processing time");
  Rational p = parse_value(toks[0], reader.number(), "p");
  if (p <= 0) throw ParseError(reader.number(), toks[0].column, "processing time must be positive");

  if (!reader.next(toks)) throw ParseError(reader.number(), 0, "missing release times line");
  const int release_line = reader.number();
  if (static_cast<int>(toks.size()) != n) {
    throw ParseError(release_line, 1,
                     "expected " + std::to_string(n) + " release times, got " +
                         std::to_string(toks.size()));
  }
  RationalVector releases;
  releases.reserve(toks.size());
  for (const auto& tok : toks) {
    Rational r = parse_value(tok, release_line, "release time");
    if (r < 0) throw ParseError(release_line, tok.column, "release time is negative");
    releases.push_back(std::move(r));
  }

  if (reader.next(toks)) throw ParseError(reader.number(), 1, "unexpected trailing content");
  return Instance::make(m, std::move(p), std::move(releases));
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << "eqsched-instance v1\n" << inst.n << ' ' << inst.m << '\n' << to_token(inst.p) << '\n';
  for (int j = 0; j < inst.n; ++j) {
    if (j > 0) out << ' ';
    out << to_token(inst.releases[j]);
  }
  out << '\n';
}

std::string instance_text(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

std::string describe(const Instance& inst) {
  std::ostringstream out;
  out << "n=" << inst.n << " m=" << inst.m << " p=" << to_token(inst.p) << " r=[";
  for (int j = 0; j < inst.n; ++j) out << (j ? "," : "") << to_token(inst.releases[j]);
  out << ']';
  return out.str();
}

Instance generate_instance(const GenParams& params) {
  if (params.n < 1 || params.m < 1 || params.p_max < 1 || params.r_max < 0) {
    throw std::invalid_argument("generator bounds below minimum (n, m, p_max >= 1; r_max >= 0)");
  }
  boost::random::mt19937_64 rng(params.seed);
  boost::random::uniform_int_distribution<int> p_dist(1, params.p_max);
  boost::random::uniform_int_distribution<int> r_dist(0, params.r_max);
  const int p = p_dist(rng);
  RationalVector releases;
  releases.reserve(params.n);
  for (int j = 0; j < params.n; ++j) releases.emplace_back(r_dist(rng));
  return Instance::make(params.m, Rational(p), std::move(releases));
}

std::vector<Instance> enumerate_instances(int n_max, int m_max, int p_max, int r_max) {
  if (n_max < 1 || m_max < 1 || p_max < 1 || r_max < 0) {
    throw std::invalid_argument("enumeration bounds below minimum");
  }
  std::vector<Instance> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 1; m <= m_max; ++m) {
      for (int p = 1; p <= p_max; ++p) {
        std::vector<int> r(n, 0);
        while (true) {
          RationalVector releases(r.begin(), r.end());
          out.push_back(Instance::make(m, Rational(p), std::move(releases)));
          // Next nondecreasing vector in lexicographic order.
          int k = n - 1;
          while (k >= 0 && r[k] == r_max) --k;
          if (k < 0) break;
          ++r[k];
          for (int i = k + 1; i < n; ++i) r[i] = r[k];
        }
      }
    }
  }
  return out;
}

}  // namespace eqsched
