#include "otrank/wdfa.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_map>

#include "otrank/errors.hpp"

namespace ot {

Wdfa::Wdfa(Alphabet alphabet, State num_states, State start)
    : alphabet_(std::move(alphabet)), num_states_(num_states), start_(start) {
  if (num_states_ == 0) throw InputError("wdfa: must have at least one state");
  if (start_ >= num_states_) throw InputError("wdfa: start state out of range");
  arcs_.assign(static_cast<std::size_t>(num_states_) * alphabet_.size(),
               Arc{0, kNoTarget});
  exit_.assign(num_states_, kNotFinal);
}

void Wdfa::add_arc(State src, SymbolId symbol, std::uint64_t weight,
                   State dst) {
  if (src >= num_states_ || dst >= num_states_)
    throw InputError("wdfa: arc state out of range");
  if (symbol >= alphabet_.size())
    throw InputError("wdfa: arc symbol out of range");
  if (weight == PathWeight::kInfinity)
    throw InputError("wdfa: arc weight must be finite");
  Arc& a = arcs_[slot(src, symbol)];
  if (a.target != kNoTarget)
    throw InputError("wdfa: duplicate arc on (" + std::to_string(src) + ", " +
                     alphabet_.name(symbol) + ")");
  a = Arc{weight, dst};
  ++num_arcs_;
}

void Wdfa::set_final(State s, std::uint64_t exit_weight) {
  if (s >= num_states_) throw InputError("wdfa: final state out of range");
  if (exit_weight == PathWeight::kInfinity)
    throw InputError("wdfa: exit weight must be finite");
  exit_[s] = exit_weight;
}

bool Wdfa::is_final(State s) const {
  return s < num_states_ && exit_[s] != kNotFinal;
}

std::uint64_t Wdfa::exit_weight(State s) const {
  if (!is_final(s)) throw InputError("wdfa: exit weight of non-final state");
  return exit_[s];
}

std::optional<Wdfa::Arc> Wdfa::arc(State src, SymbolId symbol) const {
  if (src >= num_states_ || symbol >= alphabet_.size()) return std::nullopt;
  const Arc& a = arcs_[slot(src, symbol)];
  if (a.target == kNoTarget) return std::nullopt;
  return a;
}

PathWeight Wdfa::weigh(const Word& x) const {
  State cur = start_;
  std::uint64_t acc = 0;
  for (SymbolId sym : x) {
    if (sym >= alphabet_.size()) throw InputError("weigh: symbol out of range");
    const Arc& a = arcs_[slot(cur, sym)];
    if (a.target == kNoTarget) return PathWeight::infinity();
    acc = saturating_add(acc, a.weight);
    cur = a.target;
  }
  if (exit_[cur] == kNotFinal) return PathWeight::infinity();
  acc = saturating_add(acc, exit_[cur]);
  if (acc == PathWeight::kInfinity) return PathWeight::infinity();
  return PathWeight::finite(acc);
}

bool Wdfa::operator==(const Wdfa& other) const {
  if (alphabet_ != other.alphabet_ || num_states_ != other.num_states_ ||
      start_ != other.start_ || exit_ != other.exit_)
    return false;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (arcs_[i].target != other.arcs_[i].target) return false;
    if (arcs_[i].target != kNoTarget &&
        arcs_[i].weight != other.arcs_[i].weight)
      return false;
  }
  return true;
}

PathWeight weigh(const Wdfa& a, const Word& x) { return a.weigh(x); }

// --- intersect --------------------------------------------------------------

Wdfa intersect(const Wdfa& a, const Wdfa& b, std::uint64_t state_limit) {
  if (a.alphabet() != b.alphabet())
    throw InputError("intersect: alphabet mismatch");
  const std::size_t nsym = a.alphabet().size();

  auto key = [](State sa, State sb) {
    return (static_cast<std::uint64_t>(sa) << 32) | sb;
  };
  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  struct PendingArc {
    State src;
    SymbolId sym;
    std::uint64_t weight;
    State dst;
  };
  std::vector<PendingArc> arcs;

  auto intern = [&](State sa, State sb) {
    auto [it, inserted] = ids.try_emplace(key(sa, sb),
                                          static_cast<State>(pairs.size()));
    if (inserted) {
      if (pairs.size() >= state_limit)
        throw ResourceLimitError("intersect: state limit exceeded (" +
                                 std::to_string(state_limit) + ")");
      pairs.emplace_back(sa, sb);
    }
    return it->second;
  };

  intern(a.start(), b.start());
  for (State q = 0; q < pairs.size(); ++q) {
    auto [sa, sb] = pairs[q];
    for (SymbolId sym = 0; sym < nsym; ++sym) {
      auto arc_a = a.arc(sa, sym);
      if (!arc_a) continue;
      auto arc_b = b.arc(sb, sym);
      if (!arc_b) continue;
      State dst = intern(arc_a->target, arc_b->target);
      arcs.push_back(
          {q, sym, saturating_add(arc_a->weight, arc_b->weight), dst});
    }
  }

  Wdfa out(a.alphabet(), static_cast<State>(pairs.size()), 0);
  for (const PendingArc& e : arcs) out.add_arc(e.src, e.sym, e.weight, e.dst);
  for (State q = 0; q < pairs.size(); ++q) {
    auto [sa, sb] = pairs[q];
    if (a.is_final(sa) && b.is_final(sb))
      out.set_final(q, saturating_add(a.exit_weight(sa), b.exit_weight(sb)));
  }
  return out;
}

// --- shortest accepting weight ----------------------------------------------

namespace {

constexpr std::uint64_t kUnreached = PathWeight::kInfinity;

// Dijkstra from the start state over forward arcs.  dist[q] = least arc-weight
// sum over paths start -> q.
std::vector<std::uint64_t> dijkstra_forward(const Wdfa& a) {
  std::vector<std::uint64_t> dist(a.num_states(), kUnreached);
  using Item = std::pair<std::uint64_t, State>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[a.start()] = 0;
  pq.push({0, a.start()});
  while (!pq.empty()) {
    auto [d, q] = pq.top();
    pq.pop();
    if (d != dist[q]) continue;
    for (SymbolId sym = 0; sym < a.alphabet().size(); ++sym) {
      auto arc = a.arc(q, sym);
      if (!arc) continue;
      std::uint64_t nd = saturating_add(d, arc->weight);
      if (nd < dist[arc->target]) {
        dist[arc->target] = nd;
        pq.push({nd, arc->target});
      }
    }
  }
  return dist;
}

// Dijkstra towards acceptance over reversed arcs.  dist[q] = least value of
// (arc-weight sum + exit weight) over paths q -> some final state.
std::vector<std::uint64_t> dijkstra_backward(const Wdfa& a) {
  struct Rev {
    std::uint64_t weight;
    State src;
  };
  std::vector<std::vector<Rev>> rev(a.num_states());
  for (State q = 0; q < a.num_states(); ++q) {
    for (SymbolId sym = 0; sym < a.alphabet().size(); ++sym) {
      auto arc = a.arc(q, sym);
      if (arc) rev[arc->target].push_back({arc->weight, q});
    }
  }
  std::vector<std::uint64_t> dist(a.num_states(), kUnreached);
  using Item = std::pair<std::uint64_t, State>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (State q = 0; q < a.num_states(); ++q) {
    if (a.is_final(q)) {
      dist[q] = a.exit_weight(q);
      pq.push({dist[q], q});
    }
  }
  while (!pq.empty()) {
    auto [d, q] = pq.top();
    pq.pop();
    if (d != dist[q]) continue;
    for (const Rev& r : rev[q]) {
      std::uint64_t nd = saturating_add(d, r.weight);
      if (nd < dist[r.src]) {
        dist[r.src] = nd;
        pq.push({nd, r.src});
      }
    }
  }
  return dist;
}

}  // namespace

PathWeight min_accepting_weight(const Wdfa& a) {
  std::vector<std::uint64_t> dist = dijkstra_forward(a);
  std::uint64_t best = kUnreached;
  for (State q = 0; q < a.num_states(); ++q) {
    if (dist[q] != kUnreached && a.is_final(q))
      best = std::min(best, saturating_add(dist[q], a.exit_weight(q)));
  }
  return best == kUnreached ? PathWeight::infinity()
                            : PathWeight::finite(best);
}

bool is_empty(const Wdfa& a) {
  // Plain reachability suffices; weights are irrelevant to emptiness.
  std::vector<char> seen(a.num_states(), 0);
  std::vector<State> stack{a.start()};
  seen[a.start()] = 1;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    if (a.is_final(q)) return false;
    for (SymbolId sym = 0; sym < a.alphabet().size(); ++sym) {
      auto arc = a.arc(q, sym);
      if (arc && !seen[arc->target]) {
        seen[arc->target] = 1;
        stack.push_back(arc->target);
      }
    }
  }
  return true;
}

bool has_infinite_language(const Wdfa& a) {
  // Useful states: reachable from the start and co-reachable to a final.
  const State n = a.num_states();
  std::vector<char> reach(n, 0);
  std::vector<State> stack{a.start()};
  reach[a.start()] = 1;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (SymbolId sym = 0; sym < a.alphabet().size(); ++sym) {
      auto arc = a.arc(q, sym);
      if (arc && !reach[arc->target]) {
        reach[arc->target] = 1;
        stack.push_back(arc->target);
      }
    }
  }
  std::vector<std::vector<State>> rev(n);
  for (State q = 0; q < n; ++q) {
    for (SymbolId sym = 0; sym < a.alphabet().size(); ++sym) {
      auto arc = a.arc(q, sym);
      if (arc) rev[arc->target].push_back(q);
    }
  }
  std::vector<char> coreach(n, 0);
  for (State q = 0; q < n; ++q) {
    if (a.is_final(q) && !coreach[q]) {
      coreach[q] = 1;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : rev[q]) {
      if (!coreach[p]) {
        coreach[p] = 1;
        stack.push_back(p);
      }
    }
  }
  // A cycle within the useful sub-automaton pumps infinitely many words.
  // Iterative DFS with colors over useful states only.
  std::vector<char> color(n, 0);  // 0 white, 1 gray, 2 black
  for (State root = 0; root < n; ++root) {
    if (!reach[root] || !coreach[root] || color[root] != 0) continue;
    std::vector<std::pair<State, SymbolId>> frames{{root, 0}};
    color[root] = 1;
    while (!frames.empty()) {
      auto& [q, next_sym] = frames.back();
      bool descended = false;
      while (next_sym < a.alphabet().size()) {
        auto arc = a.arc(q, next_sym);
        ++next_sym;
        if (!arc) continue;
        State t = arc->target;
        if (!reach[t] || !coreach[t]) continue;
        if (color[t] == 1) return true;  // back edge: useful cycle
        if (color[t] == 0) {
          color[t] = 1;
          frames.push_back({t, 0});
          descended = true;
          break;
        }
      }
      if (!descended && !frames.empty() &&
          frames.back().second >= a.alphabet().size()) {
        color[frames.back().first] = 2;
        frames.pop_back();
      }
    }
  }
  return false;
}

// --- prune_to_optimal ---------------------------------------------------------

Wdfa prune_to_optimal(const Wdfa& a) {
  std::vector<std::uint64_t> df = dijkstra_forward(a);
  std::vector<std::uint64_t> dt = dijkstra_backward(a);
  const std::uint64_t W = dt[a.start()];
  if (W == kUnreached)
    throw InputError("prune_to_optimal: automaton accepts no word");

  // A state q lies on some minimum-weight accepting path iff
  // df[q] + dt[q] == W; an arc (p, w, q) does iff df[p] + w + dt[q] == W;
  // a final f ends one iff df[f] + exit(f) == W.  Keeping exactly those and
  // zeroing all weights yields an acceptor of exactly the argmin set.
  const State n = a.num_states();
  auto keep_state = [&](State q) {
    return df[q] != kUnreached && dt[q] != kUnreached &&
           saturating_add(df[q], dt[q]) == W;
  };

  // Renumber kept states in BFS discovery order from the start so that the
  // output is canonical for a given input.
  std::vector<State> new_id(n, std::numeric_limits<State>::max());
  std::vector<State> order;
  std::vector<State> queue_{a.start()};
  new_id[a.start()] = 0;
  order.push_back(a.start());
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    State p = queue_[head];
    for (SymbolId sym = 0; sym < a.alphabet().size(); ++sym) {
      auto arc = a.arc(p, sym);
      if (!arc) continue;
      State q = arc->target;
      if (!keep_state(q)) continue;
      if (saturating_add(saturating_add(df[p], arc->weight), dt[q]) != W)
        continue;
      if (new_id[q] == std::numeric_limits<State>::max()) {
        new_id[q] = static_cast<State>(order.size());
        order.push_back(q);
        queue_.push_back(q);
      }
    }
  }

  Wdfa out(a.alphabet(), static_cast<State>(order.size()), 0);
  for (State p : order) {
    for (SymbolId sym = 0; sym < a.alphabet().size(); ++sym) {
      auto arc = a.arc(p, sym);
      if (!arc) continue;
      State q = arc->target;
      if (!keep_state(q)) continue;
      if (saturating_add(saturating_add(df[p], arc->weight), dt[q]) != W)
        continue;
      out.add_arc(new_id[p], sym, 0, new_id[q]);
    }
  }
  for (State f : order) {
    if (a.is_final(f) && saturating_add(df[f], a.exit_weight(f)) == W)
      out.set_final(new_id[f], 0);
  }
  return out;
}

// --- enumeration --------------------------------------------------------------

std::vector<EnumeratedWord> enumerate_words(const Wdfa& a,
                                            std::uint64_t max_count,
                                            std::uint32_t max_len) {
  std::vector<EnumeratedWord> out;
  if (max_count == 0) return out;

  // Unit (arc-count) distance to acceptance, for pruning dead prefixes.
  constexpr std::uint32_t kFar = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> unit(a.num_states(), kFar);
  {
    std::vector<std::vector<State>> rev(a.num_states());
    for (State q = 0; q < a.num_states(); ++q)
      for (SymbolId sym = 0; sym < a.alphabet().size(); ++sym)
        if (auto arc = a.arc(q, sym)) rev[arc->target].push_back(q);
    std::vector<State> bfs;
    for (State q = 0; q < a.num_states(); ++q) {
      if (a.is_final(q)) {
        unit[q] = 0;
        bfs.push_back(q);
      }
    }
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      State q = bfs[head];
      for (State p : rev[q]) {
        if (unit[p] == kFar) {
          unit[p] = unit[q] + 1;
          bfs.push_back(p);
        }
      }
    }
  }
  if (unit[a.start()] == kFar) return out;

  Word word;
  std::function<void(State, std::uint32_t, std::uint64_t, std::uint32_t)> dfs =
      [&](State q, std::uint32_t depth, std::uint64_t acc, std::uint32_t len) {
        if (out.size() >= max_count) return;
        std::uint32_t remaining = len - depth;
        if (unit[q] == kFar || unit[q] > remaining) return;
        if (remaining == 0) {
          if (a.is_final(q))
            out.push_back({word, saturating_add(acc, a.exit_weight(q))});
          return;
        }
        for (SymbolId sym = 0;
             sym < a.alphabet().size() && out.size() < max_count; ++sym) {
          auto arc = a.arc(q, sym);
          if (!arc) continue;
          word.push_back(sym);
          dfs(arc->target, depth + 1, saturating_add(acc, arc->weight), len);
          word.pop_back();
        }
      };
  for (std::uint32_t len = 0; len <= max_len && out.size() < max_count; ++len)
    dfs(a.start(), 0, 0, len);
  return out;
}

// --- constructors --------------------------------------------------------------

Wdfa make_straightline(const Alphabet& alphabet, const Word& w) {
  Wdfa out(alphabet, static_cast<State>(w.size()) + 1, 0);
  for (State i = 0; i < w.size(); ++i) out.add_arc(i, w[i], 0, i + 1);
  out.set_final(static_cast<State>(w.size()), 0);
  return out;
}

Wdfa make_word_set(const Alphabet& alphabet, const std::vector<Word>& words) {
  // Trie over symbol ids; node 0 is the root/start.
  std::vector<std::unordered_map<SymbolId, State>> next(1);
  std::vector<char> final_flag(1, 0);
  for (const Word& w : words) {
    State cur = 0;
    for (SymbolId sym : w) {
      auto it = next[cur].find(sym);
      if (it == next[cur].end()) {
        State fresh = static_cast<State>(next.size());
        next[cur].emplace(sym, fresh);
        next.emplace_back();
        final_flag.push_back(0);
        cur = fresh;
      } else {
        cur = it->second;
      }
    }
    final_flag[cur] = 1;
  }
  Wdfa out(alphabet, static_cast<State>(next.size()), 0);
  for (State q = 0; q < next.size(); ++q) {
    for (SymbolId sym = 0; sym < alphabet.size(); ++sym) {
      auto it = next[q].find(sym);
      if (it != next[q].end()) out.add_arc(q, sym, 0, it->second);
    }
    if (final_flag[q]) out.set_final(q, 0);
  }
  return out;
}

Wdfa make_all_words_of_length(const Alphabet& alphabet, std::uint32_t len) {
  Wdfa out(alphabet, len + 1, 0);
  for (State i = 0; i < len; ++i)
    for (SymbolId sym = 0; sym < alphabet.size(); ++sym)
      out.add_arc(i, sym, 0, i + 1);
  out.set_final(len, 0);
  return out;
}

// --- predicates -----------------------------------------------------------------

bool is_zero_weight(const Wdfa& a) {
  for (State q = 0; q < a.num_states(); ++q) {
    if (a.is_final(q) && a.exit_weight(q) != 0) return false;
    for (SymbolId sym = 0; sym < a.alphabet().size(); ++sym) {
      auto arc = a.arc(q, sym);
      if (arc && arc->weight != 0) return false;
    }
  }
  return true;
}

bool is_binary_valued(const Wdfa& a) {
  // Max arc-weight sum from the start to each state, saturated at 2.  Values
  // only grow and cap at 2, so the worklist settles after O(arcs) relaxations.
  constexpr std::uint64_t kCap = 2;
  const State n = a.num_states();
  std::vector<std::int8_t> maxw(n, -1);  // -1 = unreached
  std::vector<State> work{a.start()};
  maxw[a.start()] = 0;
  while (!work.empty()) {
    State q = work.back();
    work.pop_back();
    for (SymbolId sym = 0; sym < a.alphabet().size(); ++sym) {
      auto arc = a.arc(q, sym);
      if (!arc) continue;
      std::uint64_t cand = std::min<std::uint64_t>(
          kCap, static_cast<std::uint64_t>(maxw[q]) + arc->weight);
      if (static_cast<std::int8_t>(cand) > maxw[arc->target]) {
        maxw[arc->target] = static_cast<std::int8_t>(cand);
        work.push_back(arc->target);
      }
    }
  }
  for (State q = 0; q < n; ++q) {
    if (maxw[q] < 0 || !a.is_final(q)) continue;
    if (static_cast<std::uint64_t>(maxw[q]) + a.exit_weight(q) > 1)
      return false;
  }
  return true;
}

Wdfa zero_language(const Wdfa& a) {
  Wdfa out(a.alphabet(), a.num_states(), a.start());
  for (State q = 0; q < a.num_states(); ++q) {
    for (SymbolId sym = 0; sym < a.alphabet().size(); ++sym) {
      auto arc = a.arc(q, sym);
      if (arc && arc->weight == 0) out.add_arc(q, sym, 0, arc->target);
    }
    if (a.is_final(q) && a.exit_weight(q) == 0) out.set_final(q, 0);
  }
  return out;
}

}  // namespace ot
