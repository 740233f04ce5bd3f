#include "otrank/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "otrank/errors.hpp"

namespace ot::io {

namespace {

namespace fs = std::filesystem;

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::string where(const fs::path& file, std::size_t line) {
  return file.string() + ":" + std::to_string(line) + ": ";
}

// Tokenized content lines: blank lines and lines whose first token starts
// with '#' are dropped.
std::vector<Line> read_lines(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open " + file.string());
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream split(raw);
    Line line{number, {}};
    std::string tok;
    while (split >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens[0][0] == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::ofstream open_out(const fs::path& file) {
  std::ofstream out(file);
  if (!out) throw InputError("cannot write " + file.string());
  return out;
}

std::uint64_t parse_u64(const fs::path& file, const Line& line,
                        const std::string& tok) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw InputError(where(file, line.number) + "expected a number, got \"" +
                     tok + "\"");
  return v;
}

std::uint32_t parse_u32(const fs::path& file, const Line& line,
                        const std::string& tok) {
  std::uint64_t v = parse_u64(file, line, tok);
  if (v > std::numeric_limits<std::uint32_t>::max())
    throw InputError(where(file, line.number) + "number out of range: " + tok);
  return static_cast<std::uint32_t>(v);
}

void need_tokens(const fs::path& file, const Line& line, std::size_t n) {
  if (line.tokens.size() != n)
    throw InputError(where(file, line.number) + "expected " +
                     std::to_string(n) + " tokens on a \"" + line.tokens[0] +
                     "\" line");
}

Word parse_word_at(const fs::path& file, const Line& line,
                   const Alphabet& alphabet, const std::string& tok) {
  try {
    return alphabet.parse_word(tok);
  } catch (const InputError& e) {
    throw InputError(where(file, line.number) + e.what());
  }
}

}  // namespace

// --- alphabet ----------------------------------------------------------------

Alphabet load_alphabet(const fs::path& file) {
  std::vector<std::string> names;
  for (const Line& line : read_lines(file)) {
    if (line.tokens[0] != "symbol")
      throw InputError(where(file, line.number) + "expected \"symbol <name>\"");
    need_tokens(file, line, 2);
    names.push_back(line.tokens[1]);
  }
  try {
    return Alphabet(std::move(names));
  } catch (const InputError& e) {
    throw InputError(file.string() + ": " + e.what());
  }
}

void save_alphabet(const fs::path& file, const Alphabet& a) {
  std::ofstream out = open_out(file);
  for (SymbolId s = 0; s < a.size(); ++s) out << "symbol " << a.name(s) << "\n";
}

// --- wdfa --------------------------------------------------------------------

Wdfa load_wdfa(const fs::path& file, const Alphabet& alphabet) {
  std::vector<Line> lines = read_lines(file);
  if (lines.empty() || lines[0].tokens[0] != "wdfa")
    throw InputError(file.string() + ": expected \"wdfa <num-states> <start>\"");
  need_tokens(file, lines[0], 3);
  State num_states = parse_u32(file, lines[0], lines[0].tokens[1]);
  State start = parse_u32(file, lines[0], lines[0].tokens[2]);
  Wdfa m(alphabet, num_states, start);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    try {
      if (line.tokens[0] == "final") {
        if (line.tokens.size() == 2) {
          m.set_final(parse_u32(file, line, line.tokens[1]));
        } else {
          need_tokens(file, line, 3);
          m.set_final(parse_u32(file, line, line.tokens[1]),
                      parse_u64(file, line, line.tokens[2]));
        }
      } else if (line.tokens[0] == "arc") {
        need_tokens(file, line, 5);
        m.add_arc(parse_u32(file, line, line.tokens[1]),
                  alphabet.id(line.tokens[2]),
                  parse_u64(file, line, line.tokens[3]),
                  parse_u32(file, line, line.tokens[4]));
      } else {
        throw InputError("unknown keyword \"" + line.tokens[0] + "\"");
      }
    } catch (const InputError& e) {
      std::string msg = e.what();
      if (msg.compare(0, file.string().size(), file.string()) == 0) throw;
      throw InputError(where(file, line.number) + msg);
    }
  }
  return m;
}

void save_wdfa(const fs::path& file, const Wdfa& m) {
  std::ofstream out = open_out(file);
  out << "wdfa " << m.num_states() << " " << m.start() << "\n";
  for (State s = 0; s < m.num_states(); ++s) {
    if (!m.is_final(s)) continue;
    out << "final " << s;
    if (m.exit_weight(s) != 0) out << " " << m.exit_weight(s);
    out << "\n";
  }
  for (State s = 0; s < m.num_states(); ++s) {
    for (SymbolId sym = 0; sym < m.alphabet().size(); ++sym) {
      if (auto arc = m.arc(s, sym)) {
        out << "arc " << s << " " << m.alphabet().name(sym) << " "
            << arc->weight << " " << arc->target << "\n";
      }
    }
  }
}

// --- cnf (DIMACS) ------------------------------------------------------------

CnfFormula load_cnf(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open " + file.string());
  CnfFormula phi;
  bool got_header = false;
  std::string raw;
  std::size_t number = 0;
  CnfClause current;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream split(raw);
    std::string tok;
    if (!(split >> tok) || tok == "c" || tok[0] == 'c' || tok[0] == '%')
      continue;
    if (tok == "p") {
      std::string kind;
      std::uint32_t vars = 0, clauses = 0;
      if (got_header || !(split >> kind >> vars >> clauses) || kind != "cnf")
        throw InputError(where(file, number) + "bad DIMACS header");
      phi.num_vars = vars;
      got_header = true;
      continue;
    }
    if (!got_header)
      throw InputError(where(file, number) + "clause before \"p cnf\" header");
    // Literal tokens, 0-terminated; clauses may span lines.
    do {
      long long lit = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw InputError(where(file, number) + "bad literal \"" + tok + "\"");
      if (lit == 0) {
        phi.clauses.push_back(std::move(current));
        current.clear();
      } else {
        std::uint64_t var = static_cast<std::uint64_t>(lit < 0 ? -lit : lit);
        if (var > phi.num_vars)
          throw InputError(where(file, number) + "literal out of range: " +
                           tok);
        current.push_back({static_cast<std::uint32_t>(var), lit < 0});
      }
    } while (split >> tok);
  }
  if (!got_header) throw InputError(file.string() + ": missing DIMACS header");
  if (!current.empty())
    throw InputError(file.string() + ": unterminated final clause");
  phi.validate();
  return phi;
}

void save_cnf(const fs::path& file, const CnfFormula& phi) {
  std::ofstream out = open_out(file);
  out << "p cnf " << phi.num_vars << " " << phi.clauses.size() << "\n";
  for (const CnfClause& clause : phi.clauses) {
    for (const Literal& lit : clause)
      out << (lit.negated ? "-" : "") << lit.var << " ";
    out << "0\n";
  }
}

// --- digraph -----------------------------------------------------------------

Digraph load_digraph(const fs::path& file) {
  std::vector<Line> lines = read_lines(file);
  if (lines.empty() || lines[0].tokens[0] != "graph")
    throw InputError(file.string() + ": expected \"graph <order>\"");
  need_tokens(file, lines[0], 2);
  Digraph g;
  g.order = parse_u32(file, lines[0], lines[0].tokens[1]);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "edge")
      throw InputError(where(file, line.number) + "expected \"edge <i> <j>\"");
    need_tokens(file, line, 3);
    g.edges.insert({parse_u32(file, line, line.tokens[1]),
                    parse_u32(file, line, line.tokens[2])});
  }
  try {
    g.validate();
  } catch (const InputError& e) {
    throw InputError(file.string() + ": " + e.what());
  }
  return g;
}

void save_digraph(const fs::path& file, const Digraph& g) {
  std::ofstream out = open_out(file);
  out << "graph " << g.order << "\n";
  for (const auto& [from, to] : g.edges)
    out << "edge " << from << " " << to << "\n";
}

// --- formulas ----------------------------------------------------------------

FormulaSet load_formulas(const fs::path& file) {
  std::vector<Line> lines = read_lines(file);
  if (lines.empty() || lines[0].tokens[0] != "formulas")
    throw InputError(file.string() +
                     ": expected \"formulas <num-constraints>\"");
  need_tokens(file, lines[0], 2);
  std::uint32_t n = parse_u32(file, lines[0], lines[0].tokens[1]);
  std::vector<MarkDataClause> clauses;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "clause" || line.tokens.size() < 3 ||
        line.tokens[1] != "members")
      throw InputError(where(file, line.number) +
                       "expected \"clause members ... losers ...\"");
    MarkDataClause clause;
    std::size_t t = 2;
    for (; t < line.tokens.size() && line.tokens[t] != "losers"; ++t) {
      std::uint32_t c = parse_u32(file, line, line.tokens[t]);
      if (c == 0 || c > n)
        throw InputError(where(file, line.number) +
                         "constraint index out of range: " + line.tokens[t]);
      clause.members.push_back(c - 1);
    }
    if (t == line.tokens.size())
      throw InputError(where(file, line.number) + "missing \"losers\"");
    for (++t; t < line.tokens.size(); ++t) {
      std::uint32_t c = parse_u32(file, line, line.tokens[t]);
      if (c == 0 || c > n)
        throw InputError(where(file, line.number) +
                         "constraint index out of range: " + line.tokens[t]);
      clause.losers.push_back(c - 1);
    }
    clauses.push_back(std::move(clause));
  }
  return FormulaSet(n, std::move(clauses));
}

void save_formulas(const fs::path& file, const FormulaSet& f) {
  std::ofstream out = open_out(file);
  out << "formulas " << f.num_constraints() << "\n";
  for (const MarkDataClause& clause : f.clauses()) {
    out << "clause members";
    for (ConstraintId c : clause.members) out << " " << (c + 1);
    out << " losers";
    for (ConstraintId c : clause.losers) out << " " << (c + 1);
    out << "\n";
  }
}

// --- grammar -----------------------------------------------------------------

GrammarSpec load_grammar(const fs::path& dir) {
  const fs::path manifest = dir / "grammar.txt";
  std::vector<Line> lines = read_lines(manifest);
  std::optional<Alphabet> alphabet;
  for (const Line& line : lines) {
    if (line.tokens[0] != "alphabet") continue;
    need_tokens(manifest, line, 2);
    if (alphabet)
      throw InputError(where(manifest, line.number) + "duplicate alphabet");
    alphabet = load_alphabet(dir / line.tokens[1]);
  }
  if (!alphabet)
    throw InputError(manifest.string() + ": missing \"alphabet <file>\"");
  std::vector<std::pair<std::string, Wdfa>> gens;
  std::vector<Constraint> constraints;
  for (const Line& line : lines) {
    if (line.tokens[0] == "alphabet") continue;
    if (line.tokens[0] == "gen") {
      need_tokens(manifest, line, 3);
      gens.emplace_back(line.tokens[1],
                        load_wdfa(dir / line.tokens[2], *alphabet));
    } else if (line.tokens[0] == "constraint") {
      need_tokens(manifest, line, 3);
      constraints.push_back(
          {line.tokens[1], load_wdfa(dir / line.tokens[2], *alphabet)});
    } else {
      throw InputError(where(manifest, line.number) + "unknown keyword \"" +
                       line.tokens[0] + "\"");
    }
  }
  try {
    return GrammarSpec(*alphabet, std::move(gens),
                       ConstraintSet(*alphabet, std::move(constraints)));
  } catch (const InputError& e) {
    throw InputError(manifest.string() + ": " + e.what());
  }
}

void save_grammar(const fs::path& dir, const GrammarSpec& g) {
  fs::create_directories(dir);
  save_alphabet(dir / "alphabet.txt", g.alphabet());
  std::ofstream out = open_out(dir / "grammar.txt");
  out << "alphabet alphabet.txt\n";
  for (std::size_t i = 0; i < g.gens().size(); ++i) {
    std::string file = "gen" + std::to_string(i + 1) + ".txt";
    save_wdfa(dir / file, g.gens()[i].second);
    out << "gen " << g.gens()[i].first << " " << file << "\n";
  }
  for (ConstraintId c = 0; c < g.num_constraints(); ++c) {
    std::string file = "con" + std::to_string(c + 1) + ".txt";
    save_wdfa(dir / file, g.constraints().machine(c));
    out << "constraint " << g.constraints().name(c) << " " << file << "\n";
  }
}

// --- attested data -----------------------------------------------------------

std::vector<MarkDataPair> load_pairs(const fs::path& file,
                                     const Alphabet& alphabet) {
  std::vector<MarkDataPair> pairs;
  for (const Line& line : read_lines(file)) {
    if (line.tokens[0] != "pair")
      throw InputError(where(file, line.number) +
                       "expected \"pair <underlying> <winner> <loser>\"");
    need_tokens(file, line, 4);
    pairs.push_back({line.tokens[1],
                     parse_word_at(file, line, alphabet, line.tokens[2]),
                     parse_word_at(file, line, alphabet, line.tokens[3])});
  }
  return pairs;
}

void save_pairs(const fs::path& file, const std::vector<MarkDataPair>& pairs,
                const Alphabet& alphabet) {
  std::ofstream out = open_out(file);
  for (const MarkDataPair& p : pairs) {
    out << "pair " << p.underlying << " " << alphabet.format_word(p.winner)
        << " " << alphabet.format_word(p.loser) << "\n";
  }
}

std::vector<AttestedForm> load_forms(const fs::path& file,
                                     const Alphabet& alphabet) {
  std::vector<AttestedForm> forms;
  for (const Line& line : read_lines(file)) {
    if (line.tokens[0] != "form")
      throw InputError(where(file, line.number) +
                       "expected \"form <underlying> <surface>\"");
    need_tokens(file, line, 3);
    forms.push_back(
        {line.tokens[1], parse_word_at(file, line, alphabet, line.tokens[2])});
  }
  return forms;
}

void save_forms(const fs::path& file, const std::vector<AttestedForm>& forms,
                const Alphabet& alphabet) {
  std::ofstream out = open_out(file);
  for (const AttestedForm& f : forms)
    out << "form " << f.underlying << " " << alphabet.format_word(f.surface)
        << "\n";
}

std::vector<AttestedSurfaceSet> load_ssets(const fs::path& file,
                                           const Alphabet& alphabet) {
  std::vector<AttestedSurfaceSet> ssets;
  for (const Line& line : read_lines(file)) {
    if (line.tokens[0] != "sset")
      throw InputError(where(file, line.number) +
                       "expected \"sset <underlying> <machine-file>\"");
    need_tokens(file, line, 3);
    ssets.push_back({line.tokens[1],
                     load_wdfa(file.parent_path() / line.tokens[2], alphabet)});
  }
  return ssets;
}

void save_ssets(const fs::path& file,
                const std::vector<AttestedSurfaceSet>& ssets) {
  std::ofstream out = open_out(file);
  for (std::size_t i = 0; i < ssets.size(); ++i) {
    std::string machine =
        file.stem().string() + ".set" + std::to_string(i + 1) + ".txt";
    save_wdfa(file.parent_path() / machine, ssets[i].set);
    out << "sset " << ssets[i].underlying << " " << machine << "\n";
  }
}

// --- rule systems ------------------------------------------------------------

derivational::RuleSystemInstance load_rules(const fs::path& dir) {
  const fs::path manifest = dir / "rules.txt";
  std::vector<Line> lines = read_lines(manifest);
  derivational::RuleSystemInstance inst;
  std::optional<Alphabet> alphabet;
  for (const Line& line : lines) {
    if (line.tokens[0] != "alphabet") continue;
    need_tokens(manifest, line, 2);
    alphabet = load_alphabet(dir / line.tokens[1]);
  }
  if (!alphabet)
    throw InputError(manifest.string() + ": missing \"alphabet <file>\"");
  inst.alphabet = *alphabet;
  for (const Line& line : lines) {
    const std::string& kw = line.tokens[0];
    if (kw == "alphabet") continue;
    if (kw == "graph") {
      need_tokens(manifest, line, 2);
      inst.graph = load_digraph(dir / line.tokens[1]);
    } else if (kw == "rule") {
      if (line.tokens.size() == 3 && line.tokens[1] == "move") {
        inst.pool.push_back(derivational::Rule::move(
            parse_u32(manifest, line, line.tokens[2])));
      } else if (line.tokens.size() == 2 && line.tokens[1] == "accept") {
        inst.pool.push_back(derivational::Rule::accept());
      } else {
        throw InputError(where(manifest, line.number) +
                         "expected \"rule move <j>\" or \"rule accept\"");
      }
    } else if (kw == "length") {
      need_tokens(manifest, line, 2);
      inst.length = parse_u32(manifest, line, line.tokens[1]);
    } else if (kw == "pair") {
      need_tokens(manifest, line, 4);
      Word underlying =
          parse_word_at(manifest, line, *alphabet, line.tokens[1]);
      if (line.tokens[2] == "word") {
        inst.pairs.emplace_back(
            std::move(underlying),
            parse_word_at(manifest, line, *alphabet, line.tokens[3]));
      } else if (line.tokens[2] == "set") {
        inst.pairs.emplace_back(std::move(underlying),
                                load_wdfa(dir / line.tokens[3], *alphabet));
      } else {
        throw InputError(where(manifest, line.number) +
                         "expected \"pair <u> word <w>\" or \"pair <u> set "
                         "<file>\"");
      }
    } else {
      throw InputError(where(manifest, line.number) + "unknown keyword \"" +
                       kw + "\"");
    }
  }
  try {
    inst.validate();
  } catch (const InputError& e) {
    throw InputError(manifest.string() + ": " + e.what());
  }
  return inst;
}

void save_rules(const fs::path& dir,
                const derivational::RuleSystemInstance& inst) {
  fs::create_directories(dir);
  save_alphabet(dir / "alphabet.txt", inst.alphabet);
  std::ofstream out = open_out(dir / "rules.txt");
  out << "alphabet alphabet.txt\n";
  if (inst.graph) {
    save_digraph(dir / "graph.txt", *inst.graph);
    out << "graph graph.txt\n";
  }
  for (const derivational::Rule& rule : inst.pool) {
    if (const auto* move = std::get_if<derivational::MoveRule>(&rule.body))
      out << "rule move " << move->j << "\n";
    else
      out << "rule accept\n";
  }
  out << "length " << inst.length << "\n";
  std::size_t sets = 0;
  for (const auto& [underlying, target] : inst.pairs) {
    out << "pair " << inst.alphabet.format_word(underlying) << " ";
    if (const Word* w = std::get_if<Word>(&target)) {
      out << "word " << inst.alphabet.format_word(*w) << "\n";
    } else {
      std::string machine = "target" + std::to_string(++sets) + ".txt";
      save_wdfa(dir / machine, std::get<Wdfa>(target));
      out << "set " << machine << "\n";
    }
  }
}

// --- instance bundles --------------------------------------------------------

reductions::Instance load_instance(const fs::path& dir) {
  const fs::path manifest = dir / "query.txt";
  std::vector<Line> lines = read_lines(manifest);
  reductions::Instance inst;
  bool got_query = false;
  // Grammar and rules first: later lines need their alphabets.
  for (const Line& line : lines) {
    if (line.tokens[0] == "grammar") {
      need_tokens(manifest, line, 2);
      inst.grammar = load_grammar(dir / line.tokens[1]);
    } else if (line.tokens[0] == "rules") {
      need_tokens(manifest, line, 2);
      inst.rules = load_rules(dir / line.tokens[1]);
    }
  }
  auto alphabet = [&](const Line& line) -> const Alphabet& {
    if (!inst.grammar)
      throw InputError(where(manifest, line.number) +
                       "\"" + line.tokens[0] + "\" needs a grammar line");
    return inst.grammar->alphabet();
  };
  for (const Line& line : lines) {
    const std::string& kw = line.tokens[0];
    if (kw == "grammar" || kw == "rules") continue;
    if (kw == "query") {
      need_tokens(manifest, line, 2);
      auto kind = reductions::query_kind_from_name(line.tokens[1]);
      if (!kind)
        throw InputError(where(manifest, line.number) + "unknown query \"" +
                         line.tokens[1] + "\"");
      inst.query = *kind;
      got_query = true;
    } else if (kw == "ranking") {
      if (!inst.grammar)
        throw InputError(where(manifest, line.number) +
                         "\"ranking\" needs a grammar line");
      if (line.tokens.size() == 2 && line.tokens[1] == "identity") {
        inst.ranking = Ranking::identity(inst.grammar->num_constraints());
      } else {
        inst.ranking.order.clear();
        for (std::size_t t = 1; t < line.tokens.size(); ++t) {
          try {
            inst.ranking.order.push_back(
                inst.grammar->constraints().id(line.tokens[t]));
          } catch (const InputError& e) {
            throw InputError(where(manifest, line.number) + e.what());
          }
        }
        try {
          inst.ranking.validate(inst.grammar->num_constraints());
        } catch (const InputError& e) {
          throw InputError(where(manifest, line.number) + e.what());
        }
      }
    } else if (kw == "underlying") {
      need_tokens(manifest, line, 2);
      inst.underlying = line.tokens[1];
    } else if (kw == "k1" || kw == "k2") {
      ViolationVector k;
      for (std::size_t t = 1; t < line.tokens.size(); ++t)
        k.v.push_back(parse_u64(manifest, line, line.tokens[t]));
      (kw == "k1" ? inst.k1 : inst.k2) = std::move(k);
    } else if (kw == "form") {
      need_tokens(manifest, line, 3);
      inst.forms.push_back(
          {line.tokens[1],
           parse_word_at(manifest, line, alphabet(line), line.tokens[2])});
    } else if (kw == "sset") {
      need_tokens(manifest, line, 3);
      inst.ssets.push_back(
          {line.tokens[1],
           load_wdfa(dir / line.tokens[2], alphabet(line))});
    } else if (kw == "note") {
      std::string note;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        if (t > 1) note += ' ';
        note += line.tokens[t];
      }
      inst.note = std::move(note);
    } else {
      throw InputError(where(manifest, line.number) + "unknown keyword \"" +
                       kw + "\"");
    }
  }
  if (!got_query)
    throw InputError(manifest.string() + ": missing \"query <kind>\"");
  return inst;
}

void save_instance(const fs::path& dir, const reductions::Instance& inst) {
  fs::create_directories(dir);
  std::ofstream out = open_out(dir / "query.txt");
  out << "query " << reductions::query_kind_name(inst.query) << "\n";
  if (!inst.note.empty()) out << "note " << inst.note << "\n";
  if (inst.grammar) {
    save_grammar(dir / "grammar", *inst.grammar);
    out << "grammar grammar\n";
  }
  if (inst.rules) {
    save_rules(dir / "rules", *inst.rules);
    out << "rules rules\n";
  }
  if (!inst.ranking.order.empty()) {
    out << "ranking";
    for (ConstraintId c : inst.ranking.order)
      out << " " << inst.grammar->constraints().name(c);
    out << "\n";
  }
  if (!inst.underlying.empty()) out << "underlying " << inst.underlying << "\n";
  if (inst.k1) {
    out << "k1";
    for (std::uint64_t v : inst.k1->v) out << " " << v;
    out << "\n";
  }
  if (inst.k2) {
    out << "k2";
    for (std::uint64_t v : inst.k2->v) out << " " << v;
    out << "\n";
  }
  for (const AttestedForm& f : inst.forms) {
    out << "form " << f.underlying << " "
        << inst.grammar->alphabet().format_word(f.surface) << "\n";
  }
  for (std::size_t i = 0; i < inst.ssets.size(); ++i) {
    std::string machine = "sset" + std::to_string(i + 1) + ".txt";
    save_wdfa(dir / machine, inst.ssets[i].set);
    out << "sset " << inst.ssets[i].underlying << " " << machine << "\n";
  }
}

std::string format_values(const ViolationVector& v) {
  if (v.v.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < v.v.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(v.v[i]);
  }
  return out;
}

}  // namespace ot::io
