#include "wbu/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

namespace wbu::kernels {

namespace {
std::atomic<Policy> g_policy{Policy::Serial};
}

Policy default_policy() { return g_policy.load(); }
void set_default_policy(Policy p) { g_policy.store(p); }

std::vector<MultiIndex> antichain(std::vector<MultiIndex> pts, Policy policy) {
  std::sort(pts.begin(), pts.end(), GrlexLess());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (policy == Policy::Serial) {
    std::vector<MultiIndex> kept;
    for (auto& p : pts) {
      bool dominated = false;
      for (const auto& q : kept)
        if (divides(q, p)) {
          dominated = true;
          break;
        }
      if (!dominated) kept.push_back(std::move(p));
    }
    return kept;
  }
  // A dominating element is strictly smaller in grlex, so only earlier entries need checking.
  std::vector<char> dominated(pts.size(), 0);
  const long count = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < count; ++i)
    for (long j = 0; j < i; ++j)
      if (divides(pts[j], pts[i])) {
        dominated[i] = 1;
        break;
      }
  std::vector<MultiIndex> kept;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!dominated[i]) kept.push_back(std::move(pts[i]));
  return kept;
}

std::vector<MultiIndex> indices_of_degree(std::size_t n, const std::vector<std::size_t>& slots, int m) {
  std::vector<MultiIndex> out;
  MultiIndex g(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == slots.size()) {
      g[slots[i]] = left;
      out.push_back(g);
      g[slots[i]] = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      g[slots[i]] = e;
      rec(i + 1, left - e);
    }
    g[slots[i]] = 0;
  };
  if (slots.empty()) {
    if (m == 0) out.push_back(g);
    return out;
  }
  rec(0, m);
  std::sort(out.begin(), out.end(), GrlexLess());
  return out;
}

std::vector<Series> derivative_layer(const std::vector<Series>& gens, int m, const std::vector<std::size_t>& slots,
                                     Policy policy, std::size_t& touched) {
  if (gens.empty()) return {};
  const std::size_t n = gens.front().nvars();
  std::vector<MultiIndex> gammas = indices_of_degree(n, slots, m);
  const std::size_t total = gens.size() * gammas.size();
  std::vector<Series> slots_out(total);
  for_each_index(
      total,
      [&](std::size_t t) {
        const Series& g = gens[t / gammas.size()];
        slots_out[t] = derivative(g, gammas[t % gammas.size()]);
      },
      policy);
  touched += total;
  std::vector<Series> out;
  for (auto& s : slots_out)
    if (!s.is_zero() || !s.exact()) out.push_back(std::move(s));  // a truncated zero still bounds precision
  return out;
}

}  // namespace wbu::kernels
