#include "otrank/rank.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "otrank/errors.hpp"

namespace ot::rank {

namespace {

constexpr std::uint64_t kFastPathWordCap = 4096;
constexpr std::uint64_t kMrcdClauseCap = 100000;

// Internal invariant check: every clause of f must hold under the ranking
// (some member strictly above every loser).
void verify_ranking(const FormulaSet& f, const Ranking& r) {
  std::vector<std::uint32_t> pos(f.num_constraints());
  for (std::uint32_t k = 0; k < r.order.size(); ++k) pos[r.order[k]] = k;
  for (const MarkDataClause& clause : f.clauses()) {
    std::uint32_t best_member = std::numeric_limits<std::uint32_t>::max();
    for (ConstraintId c : clause.members)
      best_member = std::min(best_member, pos[c]);
    for (ConstraintId c : clause.losers) {
      if (best_member >= pos[c])
        throw std::logic_error("rank: produced ranking violates a clause");
    }
  }
}

}  // namespace

RankResult rcd(const FormulaSet& f, RcdStats* stats) {
  const std::uint32_t n = f.num_constraints();
  RcdStats local;
  RcdStats& st = stats ? *stats : local;
  st = RcdStats{};

  // remaining[c] = number of clauses in phi(c) not yet crossed off; a
  // constraint is ready (undominated) when this hits zero.
  std::vector<std::uint32_t> remaining(n);
  std::vector<char> eliminated(f.clauses().size(), 0);
  std::priority_queue<ConstraintId, std::vector<ConstraintId>,
                      std::greater<ConstraintId>>
      ready;
  for (ConstraintId c = 0; c < n; ++c) {
    remaining[c] = static_cast<std::uint32_t>(f.phi(c).size());
    if (remaining[c] == 0) ready.push(c);
  }

  Ranking ranking;
  ranking.order.reserve(n);
  while (!ready.empty()) {
    ConstraintId c = ready.top();
    ready.pop();
    ranking.order.push_back(c);
    for (std::uint32_t clause : f.member_of(c)) {
      ++st.disjunct_visits;
      if (eliminated[clause]) continue;
      eliminated[clause] = 1;
      ++st.clauses_eliminated;
      for (ConstraintId loser : f.clause_losers(clause)) {
        ++st.back_visits;
        if (--remaining[loser] == 0) ready.push(loser);
      }
    }
  }

  RankResult result;
  if (ranking.order.size() == n) {
    verify_ranking(f, ranking);
    result.ranking = std::move(ranking);
  }
  return result;
}

std::uint32_t StratifiedRanking::num_strata() const {
  std::uint32_t top = 0;
  for (std::uint32_t s : stratum) top = std::max(top, s + 1);
  return top;
}

void StratifiedRanking::normalize() {
  std::vector<std::uint32_t> used(stratum.begin(), stratum.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (std::uint32_t& s : stratum) {
    s = static_cast<std::uint32_t>(
        std::lower_bound(used.begin(), used.end(), s) - used.begin());
  }
}

Ranking StratifiedRanking::totalize() const {
  Ranking r;
  r.order.resize(stratum.size());
  for (std::uint32_t i = 0; i < stratum.size(); ++i) r.order[i] = i;
  std::stable_sort(r.order.begin(), r.order.end(),
                   [this](ConstraintId a, ConstraintId b) {
                     return stratum[a] < stratum[b];
                   });
  return r;
}

RankResult cd(const FormulaSet& f) {
  const std::uint32_t n = f.num_constraints();
  StratifiedRanking strata;
  strata.stratum.assign(n, 0);

  RankResult result;
  for (std::uint32_t pass = 1; pass <= n + 1; ++pass) {
    bool demoted = false;
    for (const MarkDataClause& clause : f.clauses()) {
      if (clause.members.empty()) {
        // No constraint can ever satisfy this clause.
        result.diag.passes = pass;
        return result;
      }
      std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
      for (ConstraintId c : clause.members)
        best = std::min(best, strata.stratum[c]);
      for (ConstraintId loser : clause.losers) {
        if (strata.stratum[loser] <= best) {
          strata.stratum[loser] = best + 1;
          demoted = true;
        }
      }
    }
    if (!demoted) {
      result.diag.passes = pass;
      strata.normalize();
      Ranking ranking = strata.totalize();
      verify_ranking(f, ranking);
      result.ranking = std::move(ranking);
      return result;
    }
  }
  // A consistent set settles within n demoting passes; pass n+1 demoting
  // proves inconsistency.
  result.diag.passes = n + 1;
  return result;
}

namespace {

// Shortest (then lexicographically least) word of a nonempty automaton.
Word first_word(const Wdfa& a) {
  auto words = enumerate_words(a, 1, a.num_states());
  if (words.empty())
    throw std::logic_error("rank: argmin automaton accepts no word");
  return std::move(words[0].word);
}

void validate_form(const GrammarSpec& g, const AttestedForm& form) {
  if (weigh(g.gen(form.underlying), form.surface).is_infinite())
    throw InputError("rank: attested surface is not a candidate for \"" +
                     form.underlying + "\"");
}

}  // namespace

RankResult edcd(const GrammarSpec& g, const std::vector<AttestedForm>& forms,
                const StratifiedRanking* initial,
                const generate::Limits& limits) {
  const std::uint32_t n = g.num_constraints();
  StratifiedRanking strata;
  if (initial) {
    if (initial->stratum.size() != n)
      throw InputError("edcd: initial strata arity mismatch");
    strata = *initial;
  } else {
    strata.stratum.assign(n, 0);
  }
  for (const AttestedForm& form : forms) validate_form(g, form);

  const std::uint64_t cap = static_cast<std::uint64_t>(n) * n;
  RankResult result;
  while (true) {
    bool clean = true;
    for (const AttestedForm& form : forms) {
      Ranking current = strata.totalize();
      generate::WinnowResult w =
          generate::winnow(g, current, form.underlying, limits);
      if (generate::evaluate(g, current, form.surface) == w.values) continue;

      // The attested form lost to the current optima: learn from one of them.
      clean = false;
      ++result.diag.errors;
      Word rival = first_word(w.optimum);
      MarkDataClause clause =
          compile_pair(g.constraints(), form.surface, rival);
      if (clause.members.empty()) {
        // The rival is at least as good everywhere: no ranking can ever
        // prefer the attested form.
        return result;
      }
      std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
      for (ConstraintId c : clause.members)
        best = std::min(best, strata.stratum[c]);
      for (ConstraintId loser : clause.losers) {
        if (strata.stratum[loser] <= best) strata.stratum[loser] = best + 1;
      }
      if (result.diag.errors > cap) {
        result.diag.error_cap_hit = true;
        return result;
      }
    }
    if (clean) break;
  }
  strata.normalize();
  result.ranking = strata.totalize();
  return result;
}

RankResult mrcd(const GrammarSpec& g, const std::vector<AttestedForm>& forms,
                const generate::Limits& limits) {
  const std::uint32_t n = g.num_constraints();
  for (const AttestedForm& form : forms) validate_form(g, form);

  std::vector<MarkDataClause> accumulated;
  Ranking current = Ranking::identity(n);
  RankResult result;
  while (true) {
    bool clean = true;
    for (const AttestedForm& form : forms) {
      generate::WinnowResult w =
          generate::winnow(g, current, form.underlying, limits);
      if (generate::evaluate(g, current, form.surface) == w.values) continue;

      clean = false;
      ++result.diag.errors;
      Word rival = first_word(w.optimum);
      accumulated.push_back(
          compile_pair(g.constraints(), form.surface, rival));
      if (accumulated.size() > kMrcdClauseCap)
        throw ResourceLimitError("mrcd: accumulated clause cap exceeded");
      RankResult sub = rcd(FormulaSet(n, accumulated));
      if (!sub.consistent()) return result;  // INCONSISTENT
      current = std::move(*sub.ranking);
    }
    if (clean) break;
  }
  result.ranking = std::move(current);
  return result;
}

RankResult rcd_all(const GrammarSpec& g,
                   const std::vector<AttestedForm>& forms,
                   const generate::Limits& limits) {
  const std::uint32_t n = g.num_constraints();
  for (const AttestedForm& form : forms) validate_form(g, form);

  // Per-form candidate sets, winnowed as constraints are committed.
  std::vector<Wdfa> winnowed;
  winnowed.reserve(forms.size());
  for (const AttestedForm& form : forms)
    winnowed.push_back(g.gen(form.underlying));

  std::vector<ConstraintId> remaining;
  for (ConstraintId c = 0; c < n; ++c) remaining.push_back(c);

  RankResult result;
  Ranking ranking;
  while (!remaining.empty()) {
    bool committed = false;
    for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
      ConstraintId c = remaining[idx];
      std::vector<Wdfa> products;
      products.reserve(forms.size());
      bool ok = true;
      for (std::size_t i = 0; i < forms.size(); ++i) {
        Wdfa product = intersect(winnowed[i], g.constraints().machine(c),
                                 limits.state_limit);
        PathWeight mw = min_accepting_weight(product);
        if (mw.is_infinite())
          throw InputError("rcd_all: constraint \"" + g.constraints().name(c) +
                           "\" rejects every remaining candidate");
        if (weigh(product, forms[i].surface) != mw) {
          ok = false;
          break;
        }
        products.push_back(std::move(product));
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < forms.size(); ++i)
        winnowed[i] = prune_to_optimal(products[i]);
      ranking.order.push_back(c);
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
      committed = true;
      break;
    }
    if (!committed) return result;  // INCONSISTENT
  }
  // Every attested form must have survived its own winnowing.
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (weigh(winnowed[i], forms[i].surface) != PathWeight::finite(0))
      throw std::logic_error("rcd_all: attested form lost despite commits");
  }
  result.ranking = std::move(ranking);
  return result;
}

namespace {

// Exact single-form analysis for {0,1}-valued constraints: the word can be
// made optimal iff no competitor satisfies a proper superset of its satisfied
// set; witness = satisfied constraints first (by id), the rest after.
std::optional<Ranking> single_form_ranking(const GrammarSpec& g,
                                           const std::string& underlying,
                                           const Word& word,
                                           const generate::Limits& limits) {
  const std::uint32_t n = g.num_constraints();
  std::vector<char> in_supp(n, 0);
  for (ConstraintId c = 0; c < n; ++c) {
    PathWeight w = weigh(g.constraints().machine(c), word);
    if (w.is_infinite())
      throw InputError("rank: constraint \"" + g.constraints().name(c) +
                       "\" rejects a candidate");
    in_supp[c] = (w.value() == 0);
  }
  Wdfa base = g.gen(underlying);
  for (ConstraintId c = 0; c < n; ++c) {
    if (in_supp[c])
      base = intersect(base, zero_language(g.constraints().machine(c)),
                       limits.state_limit);
  }
  for (ConstraintId c = 0; c < n; ++c) {
    if (in_supp[c]) continue;
    Wdfa better = intersect(base, zero_language(g.constraints().machine(c)),
                            limits.state_limit);
    if (!is_empty(better)) return std::nullopt;  // proper-superset competitor
  }
  Ranking r;
  r.order.reserve(n);
  for (ConstraintId c = 0; c < n; ++c)
    if (in_supp[c]) r.order.push_back(c);
  for (ConstraintId c = 0; c < n; ++c)
    if (!in_supp[c]) r.order.push_back(c);
  return r;
}

bool all_constraints_binary(const GrammarSpec& g) {
  for (ConstraintId c = 0; c < g.num_constraints(); ++c)
    if (!is_binary_valued(g.constraints().machine(c))) return false;
  return true;
}

}  // namespace

RankResult rank_sset(const GrammarSpec& g,
                     const std::vector<AttestedSurfaceSet>& ssets,
                     const generate::Limits& limits) {
  const std::uint32_t n = g.num_constraints();
  std::vector<Wdfa> feasible;  // X_i ∩ Gen(u_i)
  feasible.reserve(ssets.size());
  for (const AttestedSurfaceSet& sset : ssets) {
    if (!is_zero_weight(sset.set))
      throw InputError("rank_sset: attested set must be zero-weight");
    Wdfa meet =
        intersect(sset.set, g.gen(sset.underlying), limits.state_limit);
    // No member of the set is even a candidate: no ranking can work.
    if (is_empty(meet)) return RankResult{};
    feasible.push_back(std::move(meet));
  }

  RankResult result;

  // Single set, {0,1}-valued constraints, few feasible words: decide by the
  // exact single-form analysis on each feasible word in turn.
  if (ssets.size() == 1 && !has_infinite_language(feasible[0]) &&
      all_constraints_binary(g)) {
    auto words = enumerate_words(feasible[0], kFastPathWordCap + 1,
                                 feasible[0].num_states());
    if (words.size() <= kFastPathWordCap) {
      for (const EnumeratedWord& ew : words) {
        ++result.diag.nodes;
        auto witness =
            single_form_ranking(g, ssets[0].underlying, ew.word, limits);
        if (witness) {
          if (!generate::check_sset(g, *witness, ssets[0], limits))
            throw std::logic_error("rank_sset: witness failed verification");
          result.ranking = std::move(*witness);
          return result;
        }
      }
      return result;  // INCONSISTENT
    }
    // Too many feasible words: fall through to the general search.
  }

  // Backtracking over ranking prefixes.  Invariant: winnowed[i] is form i's
  // optimum automaton under the committed prefix; a prefix dies as soon as
  // some winnowed[i] misses its attested set, which is sound because further
  // constraints only shrink the optima.
  std::vector<Wdfa> winnowed;
  winnowed.reserve(ssets.size());
  for (const AttestedSurfaceSet& sset : ssets)
    winnowed.push_back(g.gen(sset.underlying));

  std::vector<char> used(n, 0);
  Ranking chosen;
  chosen.order.reserve(n);

  std::function<bool()> dfs = [&]() -> bool {
    if (chosen.order.size() == n) return true;
    for (ConstraintId c = 0; c < n; ++c) {
      if (used[c]) continue;
      ++result.diag.nodes;
      std::vector<Wdfa> next;
      next.reserve(ssets.size());
      bool ok = true;
      for (std::size_t i = 0; i < ssets.size(); ++i) {
        Wdfa product = intersect(winnowed[i], g.constraints().machine(c),
                                 limits.state_limit);
        if (min_accepting_weight(product).is_infinite())
          throw InputError("rank_sset: constraint \"" +
                           g.constraints().name(c) +
                           "\" rejects every remaining candidate");
        Wdfa optimum = prune_to_optimal(product);
        if (is_empty(intersect(optimum, ssets[i].set, limits.state_limit))) {
          ok = false;
          break;
        }
        next.push_back(std::move(optimum));
      }
      if (!ok) continue;
      std::vector<Wdfa> saved = std::move(winnowed);
      winnowed = std::move(next);
      used[c] = 1;
      chosen.order.push_back(c);
      if (dfs()) return true;
      chosen.order.pop_back();
      used[c] = 0;
      winnowed = std::move(saved);
    }
    return false;
  };

  if (dfs()) {
    for (std::size_t i = 0; i < ssets.size(); ++i) {
      if (!generate::check_sset(g, chosen, ssets[i], limits))
        throw std::logic_error("rank_sset: witness failed verification");
    }
    result.ranking = std::move(chosen);
  }
  return result;
}

SingleFormResult rankable_single(const GrammarSpec& g,
                                 const AttestedForm& form,
                                 const generate::Limits& limits) {
  if (!all_constraints_binary(g))
    throw InputError("rankable_single: requires {0,1}-valued constraints");
  validate_form(g, form);
  auto witness = single_form_ranking(g, form.underlying, form.surface, limits);
  SingleFormResult out;
  out.rankable = witness.has_value();
  if (witness) {
    if (!generate::check(g, *witness, form, limits))
      throw std::logic_error("rankable_single: witness failed verification");
    out.ranking = std::move(*witness);
  }
  return out;
}

}  // namespace ot::rank
