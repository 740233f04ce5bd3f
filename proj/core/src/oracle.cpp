#include "otrank/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "otrank/errors.hpp"

namespace ot::oracle {

namespace {

// All candidates for the key, enumerated explicitly.
std::vector<Word> enumerate_candidates(const GrammarSpec& g,
                                       const std::string& underlying,
                                       std::uint32_t max_len,
                                       std::uint64_t cap) {
  const Wdfa& gen = g.gen(underlying);
  if (has_infinite_language(gen))
    throw InputError("oracle: candidate set is infinite");
  auto enumerated = enumerate_words(gen, cap + 1, max_len);
  if (enumerated.size() > cap)
    throw ResourceLimitError("oracle: candidate enumeration cap exceeded");
  if (enumerated.empty())
    throw InputError("oracle: empty candidate set for \"" + underlying + "\"");
  std::vector<Word> words;
  words.reserve(enumerated.size());
  for (auto& e : enumerated) words.push_back(std::move(e.word));
  return words;
}

// Violation vector of one word, by weighing every constraint in ranking
// order.
ViolationVector eval_vector(const GrammarSpec& g, const Ranking& r,
                            const Word& word) {
  ViolationVector values;
  values.v.reserve(r.order.size());
  for (ConstraintId id : r.order) {
    PathWeight w = weigh(g.constraints().machine(id), word);
    if (w.is_infinite())
      throw InputError("oracle: constraint rejects a candidate");
    values.v.push_back(w.value());
  }
  return values;
}

// Apply fn to every permutation of 0..n-1 in lexicographic order until it
// returns true; yields the successful permutation.
std::optional<Ranking> first_permutation(
    std::uint32_t n, const std::function<bool(const Ranking&)>& good) {
  Ranking r = Ranking::identity(n);
  do {
    if (good(r)) return r;
  } while (std::next_permutation(r.order.begin(), r.order.end()));
  return std::nullopt;
}

constexpr std::uint32_t kMaxBruteConstraints = 7;
constexpr std::uint32_t kMaxBruteVars = 20;

}  // namespace

BruteOpt brute_opt(const GrammarSpec& g, const Ranking& r,
                   const std::string& underlying, std::uint32_t max_len,
                   std::uint64_t cap) {
  r.validate(g.num_constraints());
  std::vector<Word> candidates = enumerate_candidates(g, underlying, max_len, cap);
  BruteOpt best;
  bool have = false;
  for (const Word& w : candidates) {
    ViolationVector values = eval_vector(g, r, w);
    if (!have || values < best.values) {
      best.values = std::move(values);
      best.optima.clear();
      best.optima.push_back(w);
      have = true;
    } else if (values == best.values) {
      best.optima.push_back(w);
    }
  }
  return best;
}

std::optional<Ranking> brute_rank(const GrammarSpec& g,
                                  const std::vector<AttestedForm>& forms,
                                  std::uint32_t max_len) {
  const std::uint32_t n = g.num_constraints();
  if (n > kMaxBruteConstraints)
    throw InputError("brute_rank: too many constraints for brute force");
  return first_permutation(n, [&](const Ranking& r) {
    for (const AttestedForm& form : forms) {
      BruteOpt bo = brute_opt(g, r, form.underlying, max_len);
      if (eval_vector(g, r, form.surface) != bo.values) return false;
    }
    return true;
  });
}

std::optional<Ranking> brute_rank_sset(
    const GrammarSpec& g, const std::vector<AttestedSurfaceSet>& ssets,
    std::uint32_t max_len) {
  const std::uint32_t n = g.num_constraints();
  if (n > kMaxBruteConstraints)
    throw InputError("brute_rank_sset: too many constraints for brute force");
  return first_permutation(n, [&](const Ranking& r) {
    for (const AttestedSurfaceSet& sset : ssets) {
      BruteOpt bo = brute_opt(g, r, sset.underlying, max_len);
      bool hit = false;
      for (const Word& w : bo.optima) {
        if (!weigh(sset.set, w).is_infinite()) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  });
}

std::optional<Ranking> brute_rank_formulas(const FormulaSet& f) {
  const std::uint32_t n = f.num_constraints();
  if (n > kMaxBruteConstraints)
    throw InputError("brute_rank_formulas: too many constraints");
  return first_permutation(n, [&](const Ranking& r) {
    std::vector<std::uint32_t> pos(n);
    for (std::uint32_t k = 0; k < n; ++k) pos[r.order[k]] = k;
    for (const MarkDataClause& clause : f.clauses()) {
      std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
      for (ConstraintId c : clause.members) best = std::min(best, pos[c]);
      for (ConstraintId loser : clause.losers)
        if (best >= pos[loser]) return false;
    }
    return true;
  });
}

std::optional<std::vector<bool>> brute_msa(const CnfFormula& phi) {
  phi.validate();
  const std::uint32_t r = phi.ell();
  if (r == 0 || r > kMaxBruteVars)
    throw InputError("brute_msa: variable count out of range");
  // Assignments in lexicographic word order: variable 1 most significant.
  for (std::uint64_t bits = 0; bits < (1ull << r); ++bits) {
    std::vector<bool> assignment(r);
    for (std::uint32_t i = 0; i < r; ++i)
      assignment[i] = (bits >> (r - 1 - i)) & 1;
    if (formula_satisfied(phi, assignment)) return assignment;
  }
  return std::nullopt;
}

bool brute_qsat2(const CnfFormula& phi, std::uint32_t r) {
  phi.validate();
  const std::uint32_t s = phi.ell();
  if (s == 0 || s > kMaxBruteVars)
    throw InputError("brute_qsat2: variable count out of range");
  if (r > s) throw InputError("brute_qsat2: prefix exceeds variable count");
  const std::uint32_t t = s - r;
  for (std::uint64_t b = 0; b < (1ull << r); ++b) {
    bool all_false = true;
    for (std::uint64_t c = 0; c < (1ull << t) && all_false; ++c) {
      std::vector<bool> assignment(s);
      for (std::uint32_t i = 0; i < r; ++i)
        assignment[i] = (b >> (r - 1 - i)) & 1;
      for (std::uint32_t i = 0; i < t; ++i)
        assignment[r + i] = (c >> (t - 1 - i)) & 1;
      if (formula_satisfied(phi, assignment)) all_false = false;
    }
    if (all_false) return true;
  }
  return false;
}

bool brute_hamilton(const Digraph& g) {
  g.validate();
  if (g.order == 0) throw InputError("brute_hamilton: empty graph");
  if (g.order > 8) throw InputError("brute_hamilton: graph too large");
  std::vector<std::uint32_t> perm(g.order);
  for (std::uint32_t i = 0; i < g.order; ++i) perm[i] = i + 1;
  do {
    bool path = true;
    for (std::uint32_t i = 0; i + 1 < g.order && path; ++i)
      path = g.has_edge(perm[i], perm[i + 1]);
    if (path) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace ot::oracle
