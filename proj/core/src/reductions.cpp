#include "otrank/reductions.hpp"

#include "otrank/constraints.hpp"
#include "otrank/errors.hpp"

namespace ot::reductions {

const char* query_kind_name(QueryKind kind) {
  switch (kind) {
    case QueryKind::kOpt: return "opt";
    case QueryKind::kOptVal: return "optval";
    case QueryKind::kOptValZ: return "optvalz";
    case QueryKind::kBeatable: return "beatable";
    case QueryKind::kBest: return "best";
    case QueryKind::kRange: return "range";
    case QueryKind::kCheck: return "check";
    case QueryKind::kCheckSSet: return "checksset";
    case QueryKind::kRankSSet: return "ranksset";
    case QueryKind::kOrderable: return "orderable";
  }
  return "?";
}

std::optional<QueryKind> query_kind_from_name(const std::string& name) {
  for (QueryKind kind :
       {QueryKind::kOpt, QueryKind::kOptVal, QueryKind::kOptValZ,
        QueryKind::kBeatable, QueryKind::kBest, QueryKind::kRange,
        QueryKind::kCheck, QueryKind::kCheckSSet, QueryKind::kRankSSet,
        QueryKind::kOrderable}) {
    if (name == query_kind_name(kind)) return kind;
  }
  return std::nullopt;
}

namespace {

const GrammarSpec& need_grammar(const Instance& inst) {
  if (!inst.grammar) throw InputError("instance: query requires a grammar");
  return *inst.grammar;
}

const ViolationVector& need_k1(const Instance& inst) {
  if (!inst.k1) throw InputError("instance: query requires threshold k1");
  return *inst.k1;
}

}  // namespace

QueryOutcome run_query(const Instance& inst, const generate::Limits& limits) {
  QueryOutcome out;
  switch (inst.query) {
    case QueryKind::kOpt: {
      out.optimum = generate::opt(need_grammar(inst), inst.ranking,
                                  inst.underlying, limits);
      out.yes = true;
      break;
    }
    case QueryKind::kOptVal: {
      out.value = generate::opt_val(need_grammar(inst), inst.ranking,
                                    inst.underlying, limits);
      out.yes = true;
      break;
    }
    case QueryKind::kOptValZ: {
      out.yes = generate::opt_val_z(need_grammar(inst), inst.ranking,
                                    inst.underlying, limits);
      break;
    }
    case QueryKind::kBeatable: {
      out.yes = generate::beatable(need_grammar(inst), inst.ranking,
                                   inst.underlying, need_k1(inst), limits);
      break;
    }
    case QueryKind::kBest: {
      out.yes = generate::best(need_grammar(inst), inst.ranking,
                               inst.underlying, need_k1(inst), limits);
      break;
    }
    case QueryKind::kRange: {
      if (!inst.k2) throw InputError("instance: range requires k2");
      out.yes = generate::range(need_grammar(inst), inst.ranking,
                                inst.underlying, need_k1(inst), *inst.k2,
                                limits);
      break;
    }
    case QueryKind::kCheck: {
      if (inst.forms.empty())
        throw InputError("instance: check requires attested forms");
      out.yes = true;
      for (const AttestedForm& form : inst.forms)
        out.yes = out.yes &&
                  generate::check(need_grammar(inst), inst.ranking, form,
                                  limits);
      break;
    }
    case QueryKind::kCheckSSet: {
      if (inst.ssets.empty())
        throw InputError("instance: checksset requires attested sets");
      out.yes = true;
      for (const AttestedSurfaceSet& sset : inst.ssets)
        out.yes = out.yes && generate::check_sset(need_grammar(inst),
                                                  inst.ranking, sset, limits);
      break;
    }
    case QueryKind::kRankSSet: {
      rank::RankResult res =
          rank::rank_sset(need_grammar(inst), inst.ssets, limits);
      out.yes = res.consistent();
      out.witness = std::move(res.ranking);
      out.diag = res.diag;
      break;
    }
    case QueryKind::kOrderable: {
      if (!inst.rules)
        throw InputError("instance: orderable requires a rule system");
      derivational::OrderResult res = derivational::orderable_sset(*inst.rules);
      out.yes = res.sequence.has_value();
      out.sequence = std::move(res.sequence);
      out.diag.nodes = res.explored;
      break;
    }
  }
  return out;
}

// --- encodings ----------------------------------------------------------------

namespace {

// Walks of g of exactly `len` symbols: state 0 = nothing read, state v = last
// vertex was v; stepping to j requires the virtual start (state 0) or an
// edge; length is tracked by product with the fixed-length word set.
Wdfa make_walks_of_length(const Digraph& g, std::uint32_t len,
                          const Alphabet& alphabet) {
  Wdfa walks(alphabet, g.order + 1, 0);
  for (std::uint32_t v = 0; v <= g.order; ++v) {
    for (std::uint32_t j = 1; j <= g.order; ++j) {
      if (v == 0 || g.has_edge(v, j))
        walks.add_arc(v, static_cast<SymbolId>(j - 1), 0, j);
    }
    walks.set_final(v, 0);
  }
  return intersect(walks, make_all_words_of_length(alphabet, len));
}

std::string describe_digraph(const Digraph& g) {
  return std::to_string(g.order) + " vertices, " +
         std::to_string(g.edges.size()) + " edges";
}

}  // namespace

Instance gen_hamilton(const Digraph& g, bool bounded) {
  g.validate();
  if (g.order == 0) throw InputError("gen_hamilton: empty graph");
  const std::uint32_t r = g.order;
  Alphabet alphabet = Alphabet::digits(r);

  std::vector<Constraint> cs;
  cs.reserve(r);
  Wdfa exact_len = make_all_words_of_length(alphabet, r);
  for (std::uint32_t j = 1; j <= r; ++j) {
    Wdfa early = constraints::make_early(alphabet, alphabet.id(std::to_string(j)));
    if (bounded) early = intersect(early, exact_len);
    cs.push_back({"early" + std::to_string(j), std::move(early)});
  }

  Instance inst;
  inst.query = QueryKind::kRankSSet;
  std::vector<std::pair<std::string, Wdfa>> gens;
  gens.emplace_back("@", exact_len);
  inst.grammar = GrammarSpec(alphabet, std::move(gens),
                             ConstraintSet(alphabet, std::move(cs)));
  inst.ssets.push_back({"@", make_walks_of_length(g, r, alphabet)});
  inst.note = "hamilton path via attested-set ranking: " + describe_digraph(g);
  return inst;
}

Instance gen_msa(const CnfFormula& phi) {
  phi.validate();
  if (phi.clauses.empty()) throw InputError("gen_msa: no clauses");
  const std::uint32_t r = phi.ell();
  if (r == 0) throw InputError("gen_msa: formula uses no variables");
  Alphabet alphabet = Alphabet::bits();

  std::vector<Constraint> cs;
  cs.reserve(phi.clauses.size() + r);
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    cs.push_back({"g" + std::to_string(i + 1),
                  constraints::make_guarded_clause(alphabet, phi.clauses[i], r)});
  }
  for (std::uint32_t i = 1; i <= r; ++i) {
    cs.push_back(
        {"nv" + std::to_string(i), constraints::make_bit(alphabet, i, false)});
  }

  Instance inst;
  inst.query = QueryKind::kOptVal;
  std::vector<std::pair<std::string, Wdfa>> gens;
  gens.emplace_back("@", make_all_words_of_length(alphabet, r));
  inst.grammar = GrammarSpec(alphabet, std::move(gens),
                             ConstraintSet(alphabet, std::move(cs)));
  inst.ranking = Ranking::identity(inst.grammar->num_constraints());
  inst.underlying = "@";
  inst.note = "minimal satisfying assignment via optimal vector tail";
  return inst;
}

namespace {

// Shared by the two CNF-satisfiability encodings: plain clause constraints
// over the length-r assignments.
GrammarSpec cnfsat_grammar(const CnfFormula& phi, bool with_empty_word) {
  phi.validate();
  if (phi.clauses.empty()) throw InputError("gen_cnfsat: no clauses");
  const std::uint32_t r = phi.ell();
  if (r == 0) throw InputError("gen_cnfsat: formula uses no variables");
  Alphabet alphabet = Alphabet::bits();

  std::vector<Constraint> cs;
  cs.reserve(phi.clauses.size());
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    Wdfa clause = constraints::make_clause(alphabet, phi.clauses[i]);
    if (with_empty_word && i + 1 == phi.clauses.size()) {
      // Pin the empty word's vector to ⟨0,...,0,1⟩: only the empty word ends
      // at the start state (no arcs re-enter it).
      clause.set_final(clause.start(), 1);
    }
    cs.push_back({"d" + std::to_string(i + 1), std::move(clause)});
  }

  Wdfa gen = make_all_words_of_length(alphabet, r);
  if (with_empty_word) gen.set_final(gen.start(), 0);
  std::vector<std::pair<std::string, Wdfa>> gens;
  gens.emplace_back("@", std::move(gen));
  return GrammarSpec(alphabet, std::move(gens),
                     ConstraintSet(alphabet, std::move(cs)));
}

ViolationVector last_entry_one(std::size_t m) {
  ViolationVector k;
  k.v.assign(m, 0);
  k.v.back() = 1;
  return k;
}

}  // namespace

Instance gen_cnfsat_beatable(const CnfFormula& phi) {
  Instance inst;
  inst.query = QueryKind::kBeatable;
  inst.grammar = cnfsat_grammar(phi, false);
  inst.ranking = Ranking::identity(inst.grammar->num_constraints());
  inst.underlying = "@";
  inst.k1 = last_entry_one(phi.clauses.size());
  inst.note = "cnf satisfiability via beatable threshold";
  return inst;
}

Instance gen_cnfsat_check(const CnfFormula& phi) {
  Instance inst;
  inst.query = QueryKind::kCheck;
  inst.grammar = cnfsat_grammar(phi, true);
  inst.ranking = Ranking::identity(inst.grammar->num_constraints());
  inst.underlying = "@";
  inst.forms.push_back({"@", Word{}});
  inst.k1 = last_entry_one(phi.clauses.size());  // = the empty word's vector
  inst.note = "cnf unsatisfiability via optimality of the empty word";
  return inst;
}

Instance gen_satunsat_range(const CnfFormula& phi, const CnfFormula& psi) {
  phi.validate();
  psi.validate();
  if (phi.clauses.empty() || psi.clauses.empty())
    throw InputError("gen_satunsat_range: both formulas need clauses");
  const std::uint32_t r = phi.ell();
  const std::uint32_t shift = r;
  const std::uint32_t total = r + psi.ell();
  if (r == 0 || psi.ell() == 0)
    throw InputError("gen_satunsat_range: formulas must use variables");
  Alphabet alphabet = Alphabet::bits();

  std::vector<Constraint> cs;
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    cs.push_back({"d" + std::to_string(i + 1),
                  constraints::make_clause(alphabet, phi.clauses[i])});
  }
  for (std::size_t i = 0; i < psi.clauses.size(); ++i) {
    CnfClause shifted = psi.clauses[i];
    for (Literal& lit : shifted) lit.var += shift;
    cs.push_back({"e" + std::to_string(i + 1),
                  constraints::make_clause(alphabet, shifted)});
  }

  const std::size_t m1 = phi.clauses.size(), m2 = psi.clauses.size();
  Instance inst;
  inst.query = QueryKind::kRange;
  std::vector<std::pair<std::string, Wdfa>> gens;
  gens.emplace_back("@", make_all_words_of_length(alphabet, total));
  inst.grammar = GrammarSpec(alphabet, std::move(gens),
                             ConstraintSet(alphabet, std::move(cs)));
  inst.ranking = Ranking::identity(inst.grammar->num_constraints());
  inst.underlying = "@";
  ViolationVector k1, k2;
  k1.v.assign(m1 + m2, 0);
  k1.v.back() = 1;
  k2.v.assign(m1 + m2, 0);
  for (std::size_t i = 0; i < m2; ++i) k2.v[m1 + i] = 1;
  inst.k1 = std::move(k1);
  inst.k2 = std::move(k2);
  inst.note = "phi-satisfiable-and-psi-unsatisfiable via range query";
  return inst;
}

namespace {

// {0,1}^r followed by the pad symbol "2".
Wdfa make_padded_cube(const Alphabet& alphabet, std::uint32_t r) {
  SymbolId zero = alphabet.id("0"), one = alphabet.id("1"),
           two = alphabet.id("2");
  Wdfa x(alphabet, r + 2, 0);
  for (std::uint32_t i = 0; i < r; ++i) {
    x.add_arc(i, zero, 0, i + 1);
    x.add_arc(i, one, 0, i + 1);
  }
  x.add_arc(r, two, 0, r + 1);
  x.set_final(r + 1, 0);
  return x;
}

}  // namespace

Instance gen_qsat2(const CnfFormula& phi, std::uint32_t r) {
  phi.validate();
  if (phi.clauses.empty()) throw InputError("gen_qsat2: no clauses");
  const std::uint32_t s = phi.ell();
  if (s == 0) throw InputError("gen_qsat2: formula uses no variables");
  if (r > s)
    throw InputError("gen_qsat2: existential prefix exceeds variable count");
  Alphabet alphabet = Alphabet::bits_padded();
  SymbolId zero = alphabet.id("0"), one = alphabet.id("1"),
           two = alphabet.id("2");

  // Candidates: every length-s assignment plus every padded prefix b·2.
  Wdfa gen(alphabet, s + 2, 0);
  for (std::uint32_t i = 0; i < s; ++i) {
    gen.add_arc(i, zero, 0, i + 1);
    gen.add_arc(i, one, 0, i + 1);
  }
  gen.add_arc(r, two, 0, s + 1);
  gen.set_final(s, 0);
  gen.set_final(s + 1, 0);

  Wdfa x = make_padded_cube(alphabet, r);

  std::vector<Constraint> cs;
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    cs.push_back({"d" + std::to_string(i + 1),
                  constraints::make_clause(alphabet, phi.clauses[i])});
  }
  for (std::uint32_t i = 1; i <= r; ++i) {
    cs.push_back(
        {"v" + std::to_string(i), constraints::make_bit(alphabet, i, true)});
    cs.push_back(
        {"nv" + std::to_string(i), constraints::make_bit(alphabet, i, false)});
  }
  cs.push_back({"xbar", constraints::make_membership(x, true)});

  Instance inst;
  inst.query = QueryKind::kRankSSet;
  std::vector<std::pair<std::string, Wdfa>> gens;
  gens.emplace_back("@", std::move(gen));
  inst.grammar = GrammarSpec(alphabet, std::move(gens),
                             ConstraintSet(alphabet, std::move(cs)));
  inst.ssets.push_back({"@", std::move(x)});
  inst.note = "∃∀ falsifiability via attested-set ranking over padded prefixes";
  return inst;
}

Instance gen_msalsb(const CnfFormula& phi) {
  Instance inst = gen_msa(phi);
  const std::uint32_t r = phi.ell();
  Alphabet alphabet = inst.grammar->alphabet();
  SymbolId zero = alphabet.id("0"), one = alphabet.id("1");

  // X = length-r assignments ending in 0.
  Wdfa x(alphabet, r + 1, 0);
  for (std::uint32_t i = 0; i + 1 < r; ++i) {
    x.add_arc(i, zero, 0, i + 1);
    x.add_arc(i, one, 0, i + 1);
  }
  x.add_arc(r - 1, zero, 0, r);
  x.set_final(r, 0);

  inst.query = QueryKind::kCheckSSet;
  inst.ssets.push_back({"@", std::move(x)});
  inst.note = "minimal-assignment last bit zero via attested-set check";
  return inst;
}

GrammarSpec gen_permutation_grammar(std::uint32_t r) {
  if (r == 0) throw InputError("gen_permutation_grammar: r must be >= 1");
  Alphabet alphabet = Alphabet::digits(r);

  // Gen = Σ*: one looping, accepting state.
  Wdfa all(alphabet, 1, 0);
  for (SymbolId s = 0; s < alphabet.size(); ++s) all.add_arc(0, s, 0, 0);
  all.set_final(0, 0);

  std::vector<Constraint> cs;
  for (std::uint32_t j = 1; j <= r; ++j) {
    cs.push_back({"proj" + std::to_string(j),
                  constraints::make_project(
                      alphabet, alphabet.id(std::to_string(j)))});
  }
  cs.push_back({"short", constraints::make_short(alphabet)});

  std::vector<std::pair<std::string, Wdfa>> gens;
  gens.emplace_back("@", std::move(all));
  return GrammarSpec(alphabet, std::move(gens),
                     ConstraintSet(alphabet, std::move(cs)));
}

Instance gen_orderable_hamilton(const Digraph& g) {
  g.validate();
  if (g.order == 0) throw InputError("gen_orderable_hamilton: empty graph");
  Instance inst;
  inst.query = QueryKind::kOrderable;
  inst.rules = derivational::make_hamilton_rules(g);
  inst.note = "hamilton path via rule orderability: " + describe_digraph(g);
  return inst;
}

}  // namespace ot::reductions
