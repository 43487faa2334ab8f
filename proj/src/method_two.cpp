#include "wbu/method_two.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wbu/errors.hpp"

namespace wbu {

std::vector<Series> derive_ideal(const std::vector<Series>& gens, int m, const std::vector<std::size_t>& slots,
                                 std::size_t& touched, kernels::Policy policy) {
  std::vector<Series> all = gens;
  for (int i = 1; i <= m; ++i) {
    auto layer = kernels::derivative_layer(gens, i, slots, policy, touched);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  return prune_generators(all);
}

Ideal derive_ideal(const Ideal& I, int m) {
  std::vector<std::size_t> slots(I.nvars());
  std::iota(slots.begin(), slots.end(), 0);
  std::size_t touched = 0;
  Ideal out = I;
  out.gens = derive_ideal(I.gens, m, slots, touched);
  return out;
}

std::vector<Series> restrict_to_coordinate_slice(const std::vector<Series>& gens,
                                                 const std::vector<std::size_t>& killed) {
  std::vector<Series> out;
  for (const auto& g : gens) out.push_back(restrict_zero(g, killed));
  return prune_generators(out);
}

Ideal restrict_to_coordinate_slice(const Ideal& I, const std::vector<std::size_t>& killed) {
  for (auto k : killed)
    if (k >= I.nvars()) throw MathError("change coordinates first");
  Ideal out = I;
  out.gens = restrict_to_coordinate_slice(I.gens, killed);
  return out;
}

OrderInfo ideal_order(const std::vector<Series>& gens) {
  OrderInfo r;
  bool nonzero = false;
  int o = INT_MAX, hidden = INT_MAX;
  for (const auto& g : gens) {
    if (!g.is_zero()) {
      nonzero = true;
      o = std::min(o, g.order());
    } else if (!g.exact()) {
      hidden = std::min(hidden, std::max(g.T + 1, 0));
    }
  }
  if (!nonzero && hidden == INT_MAX) {
    r.zero = true;
    r.lower_bound = INT_MAX;
  } else if (!nonzero) {
    r.certain = false;
    r.lower_bound = hidden;
  } else if (o <= hidden) {
    r.order = o;
    r.lower_bound = o;
  } else {
    r.certain = false;
    r.lower_bound = hidden;
  }
  return r;
}

DBracket::DBracket(const std::vector<Series>& gens, std::size_t n, kernels::Policy policy)
    : gens_(prune_generators(gens)), n_(n), policy_(policy) {}

DBracket::Tower& DBracket::tower(const MultiIndex& prefix) {
  auto it = towers_.find(prefix);
  if (it != towers_.end()) return it->second;
  Tower t;
  if (prefix.empty()) {
    t.base = gens_;
  } else {
    t.base = restrict_to_coordinate_slice(get(prefix), {prefix.size() - 1});
  }
  for (std::size_t s = prefix.size(); s < n_; ++s) t.free_slots.push_back(s);
  return towers_.emplace(prefix, std::move(t)).first->second;
}

void DBracket::extend(Tower& t, int m) {
  if (t.layers.empty()) t.layers.push_back(t.base);
  while (static_cast<int>(t.layers.size()) <= m) {
    int deg = static_cast<int>(t.layers.size());
    t.layers.push_back(kernels::derivative_layer(t.base, deg, t.free_slots, kernels::Policy::Serial, t.touched));
  }
}

const std::vector<Series>& DBracket::get(const MultiIndex& beta) {
  auto it = brackets_.find(beta);
  if (it != brackets_.end()) return it->second;
  MultiIndex prefix(beta.begin(), beta.end() - 1);
  Tower& t = tower(prefix);
  extend(t, beta.back());
  std::vector<Series> all;
  for (int i = 0; i <= beta.back(); ++i) all.insert(all.end(), t.layers[i].begin(), t.layers[i].end());
  return brackets_.emplace(beta, prune_generators(all)).first->second;
}

std::vector<Series> DBracket::restricted(const MultiIndex& beta) {
  return restrict_to_coordinate_slice(get(beta), {beta.size() - 1});
}

void DBracket::prefetch(const std::vector<MultiIndex>& betas) {
  std::size_t maxlen = 0;
  for (const auto& b : betas) maxlen = std::max(maxlen, b.size());
  for (std::size_t l = 1; l <= maxlen; ++l) {
    std::map<MultiIndex, int> need;  // parent prefix -> largest last entry requested
    std::vector<MultiIndex> wanted;
    for (const auto& b : betas) {
      if (b.size() < l) continue;
      MultiIndex p(b.begin(), b.begin() + static_cast<long>(l));
      if (brackets_.count(p)) continue;
      MultiIndex parent(p.begin(), p.end() - 1);
      auto [it, fresh] = need.emplace(parent, p.back());
      if (!fresh) it->second = std::max(it->second, p.back());
      if (std::find(wanted.begin(), wanted.end(), p) == wanted.end()) wanted.push_back(p);
    }
    std::vector<Tower*> towers;
    std::vector<int> depth;
    for (const auto& [parent, m] : need) {
      towers.push_back(&tower(parent));
      depth.push_back(m);
    }
    kernels::for_each_index(towers.size(), [&](std::size_t i) { extend(*towers[i], depth[i]); }, policy_);
    std::vector<std::vector<Series>> unions(wanted.size());
    std::vector<const Tower*> owner;
    for (const auto& p : wanted) owner.push_back(&towers_.at(MultiIndex(p.begin(), p.end() - 1)));
    kernels::for_each_index(
        wanted.size(),
        [&](std::size_t i) {
          std::vector<Series> all;
          for (int d = 0; d <= wanted[i].back(); ++d)
            all.insert(all.end(), owner[i]->layers[d].begin(), owner[i]->layers[d].end());
          unions[i] = prune_generators(all);
        },
        policy_);
    for (std::size_t i = 0; i < wanted.size(); ++i) brackets_.emplace(wanted[i], std::move(unions[i]));
  }
}

std::vector<MultiIndex> simplex_indices(const PreInvariant& a) {
  std::vector<MultiIndex> out;
  MultiIndex beta(a.size(), 0);
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& d) {
    if (i == a.size()) {
      out.push_back(beta);
      return;
    }
    for (int b = 0;; ++b) {
      Rational nd = d + Rational(b) / a[i];
      if (nd >= 1) break;
      beta[i] = b;
      rec(i + 1, nd);
    }
    beta[i] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), GrlexLess());
  return out;
}

DBracket& M2State::brackets() {
  const Frame& fr = search.frame;
  if (!cache || cache_epoch != fr.epoch) {
    if (cache) touched += cache->touched();
    cache.emplace(fr.gens, fr.n(), policy);
    cache_epoch = fr.epoch;
  }
  return *cache;
}

std::size_t DBracket::touched() const {
  std::size_t t = 0;
  for (const auto& [k, tw] : towers_) t += tw.touched;
  return t;
}

std::pair<Series, std::size_t> maximal_contact(const std::vector<Series>& D, std::size_t from) {
  for (const auto& g : D) {
    if (g.is_zero()) continue;
    const std::size_t n = g.nvars();
    if (g.body.constant_term() != 0) throw InvariantViolation("contact ideal contains a unit");
    for (std::size_t l = from; l < n; ++l)
      if (g.body.coefficient(unit_index(n, l)) != 0) return {g, l};
  }
  throw MathError("not a maximal-contact ideal");
}

std::optional<XiWitness> next_entry_m2(M2State& state) {
  const PreInvariant& a = state.search.partial;
  const std::size_t j = a.size();
  DBracket& cache = state.brackets();
  if (j == 0) {
    OrderInfo info = ideal_order(state.search.frame.gens);
    if (info.zero) throw InvariantViolation("zero ideal reached the search");
    if (!info.certain) throw NeedDeeper("order not certified");
    return XiWitness{Rational(info.order), MultiIndex{info.order}};
  }
  std::vector<MultiIndex> sigma = simplex_indices(a);
  cache.prefetch(sigma);
  std::optional<XiWitness> best;
  std::vector<Rational> pending;  // lower bounds of hidden candidates
  for (const auto& bp : sigma) {
    OrderInfo info = ideal_order(cache.restricted(bp));
    if (info.zero) continue;
    Rational one_minus = 1 - delta(a, bp);
    if (!info.certain) {
      pending.push_back(Rational(info.lower_bound) / one_minus);
      continue;
    }
    Rational v = Rational(info.order) / one_minus;
    MultiIndex full = bp;
    full.push_back(info.order);
    if (!best || v < best->value || (v == best->value && GrlexLess()(full, best->beta))) best = XiWitness{v, full};
  }
  for (const auto& lb : pending)
    if (!best || lb < best->value) throw NeedDeeper("hidden candidate could undercut the minimum");
  return best;
}

bool admissible_m2(M2State& state) {
  const PreInvariant& a = state.search.partial;
  Rational sum = 0;
  for (const auto& q : a) sum += q;
  int shortfall = 0;
  const int need = admissibility_degree(a, state.search.frame.n(), max_degree(state.search.original));
  DBracket& cache = state.brackets();
  auto sigma = simplex_indices(a);
  cache.prefetch(sigma);
  for (const auto& bp : sigma) {
    for (const auto& g : cache.restricted(bp)) {
      if (!g.is_zero()) return false;
      if (!g.exact() && g.T < need) shortfall = std::max(shortfall, need - g.T);
    }
  }
  if (shortfall > 0) throw NeedDeeper("vanishing not certified", shortfall);
  const Frame& fr = state.search.frame;
  if (!fr.exact() && a.size() < fr.n()) {
    Frame::TailCheck tc = fr.tail_check(state.search.original, a.size());
    if (tc.state == Frame::TailCheck::Nonzero)
      throw NeedDeeper("term in the remaining coordinates beyond the truncation",
                       std::max(1, tc.order + 1 - state.search.T));
  }
  return true;
}

CentreResult associated_centre_m2(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                                  const PointQ& p, kernels::Policy policy) {
  CentreSearchState s0 = start_state(vars, gens, p);
  const int cap = truncation_cap();
  const std::size_t n = vars.size();
  std::size_t touched_total = 0;
  for (int T = s0.T;;) {
    M2State st;
    st.search = T == s0.T ? s0 : start_state_at(vars, gens, p, T);
    st.policy = policy;
    try {
      for (;;) {
        CentreSearchState& s = st.search;
        const std::size_t j = s.partial.size();
        if (j >= 1 && admissible_m2(st)) {
          MarkedCentre J = s.frame.centre(vars, s.point, s.partial);
          J.certified = s.frame.exact() || j == n;
          touched_total += st.touched + (st.cache ? st.cache->touched() : 0);
          return {J, s.trace, touched_total};
        }
        if (j >= n) throw InvariantViolation("no admissible centre within the ambient dimension");
        auto w = next_entry_m2(st);
        if (!w) throw InvariantViolation("no candidate entry although the centre is not admissible");
        if (j >= 1 && w->value < s.partial.back()) throw InvariantViolation("invariant entries decreased");
        MultiIndex contact = w->beta;
        contact.back() -= 1;
        const auto& D = st.brackets().get(contact);
        auto [param, l] = maximal_contact(D, j);
        std::size_t gi = 0;
        while (gi < D.size() && !(D[gi].body == param.body)) ++gi;
        s.frame.adopt_parameter(param, l, j, s.T);
        s.partial.push_back(w->value);
        s.trace.push_back({w->value, w->beta, l, gi, s.frame.exact() ? Series::kExact : s.T});
      }
    } catch (const NeedDeeper& e) {
      touched_total += st.touched + (st.cache ? st.cache->touched() : 0);
      const int next = deepen(T, e);
      if (next > cap)
        throw MathError(std::string("truncation cap exceeded (") + e.what() + ", T=" + std::to_string(T) + ")");
      T = next;
    }
  }
}

}  // namespace wbu
