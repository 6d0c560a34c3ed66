#include "nervekit/codec.h"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nervekit/enumerate.h"
#include "nervekit/errors.h"

namespace nervekit {

IntervalRep encoding_intervals(const CompressedRep& rep) {
  std::vector<Interval> j;
  for (Vertex v = 1; v <= rep.size(); ++v) j.push_back({rep.left(v), rep.right(v) + 2});
  j.push_back({0, 1});
  return IntervalRep(std::move(j));
}

Graph encode(const Poset& p) {
  if (p.n() < 1) throw PreconditionError("encode needs at least one element");
  return interval_graph(encoding_intervals(canonical_compressed(p)));
}

CompressedRep decode(const Graph& g) {
  const int n = g.n();
  if (n < 2) throw NotCodecImage("codec images have at least two vertices");
  const int m = n - 1;
  const Face base = Face::full(m);
  CompressedRep out{std::vector<Face>(m), std::vector<Face>(m)};
  out.a[0] = g.neighbors(n);
  Face seen_a = out.a[0];
  Face removed_b;
  for (int i = 1; i <= n - 2; ++i) {
    const Face alive = base - removed_b;
    if (alive.empty()) break;
    const Face a = seen_a & alive;
    if (a.empty()) throw NotCodecImage("no open interval at step " + std::to_string(i));
    std::vector<Face> hoods;
    a.for_each([&](Vertex v) { hoods.push_back(g.closed_neighbors(v) & alive); });
    const Face smallest = *std::min_element(hoods.begin(), hoods.end());
    for (Face h : hoods) {
      if (!smallest.is_subset_of(h)) {
        throw NotCodecImage("neighbourhoods are not nested at step " + std::to_string(i));
      }
    }
    Face b;
    int idx = 0;
    a.for_each([&](Vertex v) {
      if (hoods[idx++] == smallest) b = b.with(v);
    });
    out.b[i - 1] = b;
    out.a[i] = smallest - a;
    removed_b |= b;
    seen_a |= out.a[i];
  }
  out.b[m - 1] |= base - removed_b;
  try {
    validate(out);
  } catch (const InputError& e) {
    throw NotCodecImage(std::string("recovered structure is invalid: ") + e.what());
  }
  if (interval_graph(encoding_intervals(out)) != g) {
    throw NotCodecImage("recovered representation does not reproduce the graph");
  }
  return out;
}

RoundtripReport roundtrip_check(int n, int jobs) {
  if (n < 2 || n > 8) throw LimitError("roundtrip_check supports 2 <= n <= 8");
  jobs = std::max(jobs, 1);
  struct Partial {
    uint64_t orders = 0;
    uint64_t failures = 0;
    std::unordered_set<uint64_t> codes;
  };
  std::vector<Partial> parts(jobs);
  auto work = [&](int t) {
    Partial& part = parts[t];
    uint64_t index = 0;
    for_each_interval_order(n - 1, [&](const Poset& p) {
      if (static_cast<int>(index++ % jobs) != t) return;
      ++part.orders;
      try {
        const Graph g = encode(p);
        part.codes.insert(g.code());
        if (decode(g) != canonical_compressed(p)) ++part.failures;
      } catch (const std::exception&) {
        ++part.failures;
      }
    });
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(work, t);
    for (auto& th : threads) th.join();
  }
  RoundtripReport report;
  report.n = n;
  std::unordered_set<uint64_t> all;
  for (const Partial& part : parts) {
    report.orders += part.orders;
    report.failures += part.failures;
    all.insert(part.codes.begin(), part.codes.end());
  }
  report.images = all.size();
  return report;
}

std::string to_csv(const RoundtripReport& r) {
  return std::to_string(r.n) + "," + std::to_string(r.orders) + "," + std::to_string(r.images) +
         "," + std::to_string(r.failures);
}

RelabelReport relabel_experiment(int n) {
  if (n < 2 || n > 7) throw LimitError("relabel experiment supports 2 <= n <= 7");
  std::unordered_map<uint64_t, uint64_t> fibers;
  RelabelReport report;
  report.n = n;
  for_each_interval_order(n - 1, [&](const Poset& p) {
    const auto j = encoding_intervals(canonical_compressed(p)).intervals();
    for (Vertex special = 1; special <= n; ++special) {
      std::vector<Interval> relabeled;
      for (Vertex v = 1, next = 0; v <= n; ++v) {
        relabeled.push_back(v == special ? j.back() : j[next++]);
      }
      ++fibers[interval_graph(IntervalRep(std::move(relabeled))).code()];
      ++report.pairs;
    }
  });
  report.images = fibers.size();
  for (const auto& [code, count] : fibers) report.max_fiber = std::max(report.max_fiber, count);
  return report;
}

}  // namespace nervekit
