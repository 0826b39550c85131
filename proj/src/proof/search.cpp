#include "latcov/proof/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace latcov::proof {

namespace {

std::vector<Compiled> selected(const std::vector<Constraint>& cs, const SearchOptions& opt) {
  std::vector<Compiled> out;
  for (const auto& c : cs) {
    if (std::find(opt.drop_ids.begin(), opt.drop_ids.end(), c.id) != opt.drop_ids.end()) continue;
    bool intra = c.intra_face();
    if (opt.intra_only && !intra) continue;
    if (opt.cross_face_only && !opt.intra_only && intra) continue;
    out.push_back(compile(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const Compiled& a, const Compiled& b) { return a.id < b.id; });
  return out;
}

template <class F>
void run_workers(unsigned n, std::size_t jobs, F f) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex m;
  auto work = [&] {
    try {
      for (std::size_t i; (i = next++) < jobs;) f(i);
    } catch (...) {
      std::lock_guard lk(m);
      if (!err) err = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace

unsigned resolve_workers(int requested) {
  if (requested > 0) return unsigned(requested);
  if (const char* env = std::getenv("LATCOV_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return unsigned(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int first_violation(const std::vector<Compiled>& cs, const Assignment& a) {
  for (const auto& c : cs)
    for (int k = 0; k < 4; ++k)
      if (!c.holds(a, k)) return c.id;
  return 0;
}

std::uint64_t InfeasibilityCertificate::index(const std::array<int, 4>& i) const {
  std::uint64_t n = families.size(), x = 0;
  for (int f = 0; f < 4; ++f) x = x * n + std::uint64_t(i[f]);
  return x;
}

std::array<int, 4> InfeasibilityCertificate::tuple(std::uint64_t x) const {
  std::uint64_t n = families.size();
  std::array<int, 4> i{};
  for (int f = 3; f >= 0; --f) {
    i[f] = int(x % n);
    x /= n;
  }
  return i;
}

InfeasibilityCertificate search_infeasibility(const std::vector<Mask>& families, const std::vector<Constraint>& cs,
                                              const SearchOptions& opt) {
  InfeasibilityCertificate cert;
  cert.families = families;
  cert.dropped = opt.drop_ids;
  auto cc = selected(cs, opt);
  for (const auto& c : cc) cert.constraint_ids.push_back(c.id);
  const std::uint64_t n = families.size();
  cert.tuples = n * n * n * n;
  if (opt.keep_trace) cert.first_violation.assign(cert.tuples, 0);

  // One job per family on face 0; merged in job order.
  std::vector<std::map<int, std::uint64_t>> hist(n);
  std::vector<std::vector<Assignment>> surv(n);
  run_workers(resolve_workers(opt.workers), n, [&](std::size_t i0) {
    Assignment a{families[i0], 0, 0, 0};
    std::uint64_t base = i0 * n * n * n;
    std::array<std::uint64_t, 256> local{};
    for (std::uint64_t i1 = 0; i1 < n; ++i1) {
      a[1] = families[i1];
      for (std::uint64_t i2 = 0; i2 < n; ++i2) {
        a[2] = families[i2];
        for (std::uint64_t i3 = 0; i3 < n; ++i3) {
          a[3] = families[i3];
          int v = first_violation(cc, a);
          ++local[v];
          if (opt.keep_trace) cert.first_violation[base + (i1 * n + i2) * n + i3] = std::uint8_t(v);
          if (!v) surv[i0].push_back(a);
        }
      }
    }
    for (int id = 0; id < 256; ++id)
      if (local[id]) hist[i0][id] = local[id];
  });
  for (std::uint64_t i = 0; i < n; ++i) {
    for (auto [id, c] : hist[i]) cert.histogram[id] += c;
    cert.survivors.insert(cert.survivors.end(), surv[i].begin(), surv[i].end());
  }
  cert.histogram.erase(0);
  cert.infeasible = cert.survivors.empty();
  return cert;
}

BacktrackResult search_backtracking(const std::vector<Mask>& sets, const std::vector<Constraint>& cs,
                                    const SearchOptions& opt) {
  auto cc = selected(cs, opt);
  // Clause instances that become decidable once face d is assigned.
  struct Inst {
    const Compiled* c;
    int k;
  };
  std::array<std::vector<Inst>, 4> at;
  for (const auto& c : cc)
    for (int k = 0; k < 4; ++k) {
      int last = 0;
      for (int o = 0; o < 4; ++o)
        if (c.faces >> o & 1) last = std::max(last, (k + o) & 3);
      at[last].push_back({&c, k});
    }

  BacktrackResult r;
  std::mutex m;
  std::atomic<std::uint64_t> nodes{0}, leaves{0};
  run_workers(resolve_workers(opt.workers), sets.size(), [&](std::size_t i0) {
    Assignment a{sets[i0], 0, 0, 0};
    std::uint64_t my_nodes = 0, my_leaves = 0;
    std::vector<Assignment> found;
    auto ok = [&](int d) {
      for (const auto& in : at[d])
        if (!in.c->holds(a, in.k)) return false;
      return true;
    };
    auto rec = [&](auto&& self, int d) -> void {
      ++my_nodes;
      bool good = ok(d);
      if (d == 3) {
        ++my_leaves;
        if (good) found.push_back(a);
        return;
      }
      if (!good) return;
      for (Mask s : sets) {
        a[d + 1] = s;
        self(self, d + 1);
      }
      a[d + 1] = 0;
    };
    rec(rec, 0);
    nodes += my_nodes;
    leaves += my_leaves;
    std::lock_guard lk(m);
    r.survivors.insert(r.survivors.end(), found.begin(), found.end());
  });
  r.nodes = nodes;
  r.leaves = leaves;
  std::sort(r.survivors.begin(), r.survivors.end());
  r.infeasible = r.survivors.empty();
  return r;
}

}  // namespace latcov::proof
