#ifndef OTRANK_IO_HPP
#define OTRANK_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "otrank/cnf.hpp"
#include "otrank/derivational.hpp"
#include "otrank/digraph.hpp"
#include "otrank/formula.hpp"
#include "otrank/grammar.hpp"
#include "otrank/reductions.hpp"

// Plain-text serialization.  All formats (except DIMACS cnf) are line-based:
// every line starts with a keyword, blank lines and lines whose first token
// starts with '#' are ignored, and words are written in the alphabet's
// surface form ("@" for the empty word).  Loaders throw InputError with
// file:line context on malformed input.  See docs/formats.md.
namespace ot::io {

// `symbol <name>` per line.
Alphabet load_alphabet(const std::filesystem::path& file);
void save_alphabet(const std::filesystem::path& file, const Alphabet& a);

// `wdfa <num-states> <start>`, then `final <state> [<exit>]` and
// `arc <src> <symbol> <weight> <dst>` lines.
Wdfa load_wdfa(const std::filesystem::path& file, const Alphabet& alphabet);
void save_wdfa(const std::filesystem::path& file, const Wdfa& m);

// DIMACS cnf.
CnfFormula load_cnf(const std::filesystem::path& file);
void save_cnf(const std::filesystem::path& file, const CnfFormula& phi);

// `graph <order>`, then `edge <from> <to>` lines (vertices 1-based).
Digraph load_digraph(const std::filesystem::path& file);
void save_digraph(const std::filesystem::path& file, const Digraph& g);

// `formulas <num-constraints>`, then
// `clause members <i>... losers <i>...` lines (constraints 1-based).
FormulaSet load_formulas(const std::filesystem::path& file);
void save_formulas(const std::filesystem::path& file, const FormulaSet& f);

// A grammar is a directory: manifest `grammar.txt` with `alphabet <file>`,
// `gen <key> <file>` and `constraint <name> <file>` lines, all paths
// relative to the directory.
GrammarSpec load_grammar(const std::filesystem::path& dir);
void save_grammar(const std::filesystem::path& dir, const GrammarSpec& g);

// `pair <underlying> <winner> <loser>` lines.
std::vector<MarkDataPair> load_pairs(const std::filesystem::path& file,
                                     const Alphabet& alphabet);
void save_pairs(const std::filesystem::path& file,
                const std::vector<MarkDataPair>& pairs,
                const Alphabet& alphabet);

// `form <underlying> <surface>` lines.
std::vector<AttestedForm> load_forms(const std::filesystem::path& file,
                                     const Alphabet& alphabet);
void save_forms(const std::filesystem::path& file,
                const std::vector<AttestedForm>& forms,
                const Alphabet& alphabet);

// `sset <underlying> <machine-file>` lines; machine paths are relative to
// the listing file's directory.  save_ssets writes the machines as
// `<stem>.set<i>.txt` siblings.
std::vector<AttestedSurfaceSet> load_ssets(const std::filesystem::path& file,
                                           const Alphabet& alphabet);
void save_ssets(const std::filesystem::path& file,
                const std::vector<AttestedSurfaceSet>& ssets);

// A rule system is a directory: manifest `rules.txt` with `alphabet <file>`,
// optional `graph <file>`, `rule move <j>` / `rule accept` pool lines in
// order, `length <n>`, and `pair <underlying> word <surface>` or
// `pair <underlying> set <machine-file>` lines.
derivational::RuleSystemInstance load_rules(const std::filesystem::path& dir);
void save_rules(const std::filesystem::path& dir,
                const derivational::RuleSystemInstance& inst);

// An instance bundle is a directory: `query.txt` plus `grammar/` and/or
// `rules/` subdirectories and any referenced machine files.  query.txt lines:
//   query <kind>            one of the QueryKind names
//   grammar <dir>           relative; loads grammar/
//   ranking identity | ranking <constraint-name>...
//   underlying <key>
//   k1 <int>... / k2 <int>...
//   form <underlying> <surface>
//   sset <underlying> <machine-file>
//   rules <dir>
//   note <free text>
reductions::Instance load_instance(const std::filesystem::path& dir);
void save_instance(const std::filesystem::path& dir,
                   const reductions::Instance& inst);

// Violation vectors as space-separated decimal entries ("-" when empty).
std::string format_values(const ViolationVector& v);

}  // namespace ot::io

#endif  // OTRANK_IO_HPP
