#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "otrank/errors.hpp"
#include "otrank/io.hpp"
#include "otrank/oracle.hpp"
#include "otrank/reductions.hpp"
#include "otrank/synth.hpp"

using namespace ot;
namespace fs = std::filesystem;

namespace {

// Scratch directory, wiped on both ends of each test.
struct TempDir {
  fs::path path;

  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("otrank-io-" + tag)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  fs::path file(const std::string& name) const { return path / name; }
};

void write_text(const fs::path& file, const std::string& text) {
  std::ofstream out(file);
  out << text;
}

}  // namespace

TEST_CASE("io: alphabets round-trip") {
  TempDir tmp("alphabet");
  for (Alphabet a : {Alphabet::bits(), Alphabet({"ka", "ta", "pa"})}) {
    io::save_alphabet(tmp.file("a.txt"), a);
    CHECK(io::load_alphabet(tmp.file("a.txt")) == a);
  }
  write_text(tmp.file("bad.txt"), "letter x\n");
  CHECK_THROWS_AS(io::load_alphabet(tmp.file("bad.txt")), InputError);
  write_text(tmp.file("dup.txt"), "symbol x\nsymbol x\n");
  CHECK_THROWS_AS(io::load_alphabet(tmp.file("dup.txt")), InputError);
  CHECK_THROWS_AS(io::load_alphabet(tmp.file("absent.txt")), InputError);
}

TEST_CASE("io: machines round-trip with weights and exits") {
  TempDir tmp("wdfa");
  Alphabet a = Alphabet::bits();
  Wdfa m(a, 3, 0);
  m.add_arc(0, a.id("0"), 2, 1);
  m.add_arc(0, a.id("1"), 0, 2);
  m.add_arc(1, a.id("1"), 1, 1);
  m.set_final(1, 5);
  m.set_final(2);  // zero exit is omitted in the file
  io::save_wdfa(tmp.file("m.txt"), m);
  CHECK(io::load_wdfa(tmp.file("m.txt"), a) == m);

  // Comments and blank lines are ignored.
  write_text(tmp.file("c.txt"),
             "# a machine\nwdfa 1 0\n\nfinal 0 7\narc 0 1 0 0\n");
  Wdfa loaded = io::load_wdfa(tmp.file("c.txt"), a);
  CHECK(loaded.num_states() == 1);
  CHECK(loaded.exit_weight(0) == 7);

  write_text(tmp.file("bad1.txt"), "wdfa 1 0\narc 0 x 0 0\n");
  CHECK_THROWS_AS(io::load_wdfa(tmp.file("bad1.txt"), a), InputError);
  write_text(tmp.file("bad2.txt"), "wdfa 1 0\narc 0 1 0 4\n");
  CHECK_THROWS_AS(io::load_wdfa(tmp.file("bad2.txt"), a), InputError);
  write_text(tmp.file("bad3.txt"), "final 0\n");
  CHECK_THROWS_AS(io::load_wdfa(tmp.file("bad3.txt"), a), InputError);
}

TEST_CASE("io: DIMACS formulas round-trip") {
  TempDir tmp("cnf");
  CnfFormula phi{3, {{{1, false}, {2, true}}, {{3, false}}}};
  io::save_cnf(tmp.file("phi.cnf"), phi);
  CnfFormula back = io::load_cnf(tmp.file("phi.cnf"));
  CHECK(back.num_vars == 3);
  REQUIRE(back.clauses.size() == 2);
  CHECK(back.clauses[0] == phi.clauses[0]);
  CHECK(back.clauses[1] == phi.clauses[1]);

  // Comments, split clauses, and a trailing '%' marker.
  write_text(tmp.file("h.cnf"),
             "c comment\np cnf 2 2\n1 -2\n0\n-1 2 0\n%\n");
  CnfFormula h = io::load_cnf(tmp.file("h.cnf"));
  CHECK(h.clauses.size() == 2);
  CHECK(h.clauses[0] == CnfClause{{1, false}, {2, true}});

  write_text(tmp.file("nohead.cnf"), "1 0\n");
  CHECK_THROWS_AS(io::load_cnf(tmp.file("nohead.cnf")), InputError);
  write_text(tmp.file("range.cnf"), "p cnf 1 1\n2 0\n");
  CHECK_THROWS_AS(io::load_cnf(tmp.file("range.cnf")), InputError);
  write_text(tmp.file("open.cnf"), "p cnf 1 1\n1\n");
  CHECK_THROWS_AS(io::load_cnf(tmp.file("open.cnf")), InputError);
}

TEST_CASE("io: digraphs round-trip") {
  TempDir tmp("digraph");
  Digraph g{4, {{1, 2}, {2, 3}, {4, 1}}};
  io::save_digraph(tmp.file("g.txt"), g);
  CHECK(io::load_digraph(tmp.file("g.txt")) == g);
  write_text(tmp.file("bad.txt"), "graph 2\nedge 1 3\n");
  CHECK_THROWS_AS(io::load_digraph(tmp.file("bad.txt")), InputError);
}

TEST_CASE("io: formula sets round-trip one-based") {
  TempDir tmp("formulas");
  FormulaSet f(4, {{{0, 2}, {1}}, {{3}, {0, 2}}});
  io::save_formulas(tmp.file("f.txt"), f);
  FormulaSet back = io::load_formulas(tmp.file("f.txt"));
  CHECK(back.num_constraints() == 4);
  REQUIRE(back.clauses().size() == 2);
  CHECK(back.clauses()[0].members == f.clauses()[0].members);
  CHECK(back.clauses()[0].losers == f.clauses()[0].losers);
  CHECK(back.clauses()[1].members == f.clauses()[1].members);
  CHECK(back.clauses()[1].losers == f.clauses()[1].losers);

  write_text(tmp.file("zero.txt"), "formulas 2\nclause members 0 losers 1\n");
  CHECK_THROWS_AS(io::load_formulas(tmp.file("zero.txt")), InputError);
  write_text(tmp.file("high.txt"), "formulas 2\nclause members 1 losers 3\n");
  CHECK_THROWS_AS(io::load_formulas(tmp.file("high.txt")), InputError);
  write_text(tmp.file("nolosers.txt"), "formulas 2\nclause members 1 2\n");
  CHECK_THROWS_AS(io::load_formulas(tmp.file("nolosers.txt")), InputError);
}

TEST_CASE("io: grammars round-trip as directories") {
  TempDir tmp("grammar");
  GrammarSpec g = testutil::bits_grammar({"011", "110", "000"}, 3);
  io::save_grammar(tmp.file("g"), g);
  CHECK(io::load_grammar(tmp.file("g")) == g);

  fs::create_directories(tmp.file("broken"));
  write_text(tmp.file("broken") / "grammar.txt", "gen u gen1.txt\n");
  CHECK_THROWS_AS(io::load_grammar(tmp.file("broken")), InputError);
}

TEST_CASE("io: attested data files round-trip") {
  TempDir tmp("attested");
  Alphabet a = Alphabet::bits();

  std::vector<MarkDataPair> pairs{
      {"u", a.parse_word("01"), a.parse_word("10")},
      {"v", a.parse_word("@"), a.parse_word("111")},
  };
  io::save_pairs(tmp.file("pairs.txt"), pairs, a);
  auto pairs2 = io::load_pairs(tmp.file("pairs.txt"), a);
  REQUIRE(pairs2.size() == 2);
  CHECK(pairs2[0].underlying == "u");
  CHECK(pairs2[0].winner == pairs[0].winner);
  CHECK(pairs2[1].loser == pairs[1].loser);
  CHECK(pairs2[1].winner.empty());

  std::vector<AttestedForm> forms{{"u", a.parse_word("01")},
                                  {"w", a.parse_word("@")}};
  io::save_forms(tmp.file("forms.txt"), forms, a);
  auto forms2 = io::load_forms(tmp.file("forms.txt"), a);
  REQUIRE(forms2.size() == 2);
  CHECK(forms2[0].underlying == "u");
  CHECK(forms2[0].surface == forms[0].surface);
  CHECK(forms2[1].surface.empty());

  std::vector<AttestedSurfaceSet> ssets{
      {"u", make_word_set(a, {a.parse_word("01"), a.parse_word("10")})},
      {"v", make_word_set(a, {a.parse_word("0")})},
  };
  io::save_ssets(tmp.file("ssets.txt"), ssets);
  auto ssets2 = io::load_ssets(tmp.file("ssets.txt"), a);
  REQUIRE(ssets2.size() == 2);
  CHECK(ssets2[0].underlying == "u");
  CHECK(ssets2[0].set == ssets[0].set);
  CHECK(ssets2[1].set == ssets[1].set);

  write_text(tmp.file("badform.txt"), "form u 012\n");
  CHECK_THROWS_AS(io::load_forms(tmp.file("badform.txt"), a), InputError);
}

TEST_CASE("io: rule systems round-trip as directories") {
  TempDir tmp("rules");
  derivational::RuleSystemInstance inst =
      derivational::make_hamilton_rules(Digraph{3, {{1, 2}, {2, 3}}});
  io::save_rules(tmp.file("r"), inst);
  derivational::RuleSystemInstance back = io::load_rules(tmp.file("r"));
  CHECK(back.alphabet == inst.alphabet);
  REQUIRE(back.graph.has_value());
  CHECK(*back.graph == *inst.graph);
  CHECK(back.length == inst.length);
  REQUIRE(back.pool.size() == inst.pool.size());
  for (std::size_t i = 0; i < back.pool.size(); ++i)
    CHECK(back.pool[i].name == inst.pool[i].name);
  REQUIRE(back.pairs.size() == 1);
  CHECK(back.pairs[0].first == inst.pairs[0].first);
  CHECK(std::get<Word>(back.pairs[0].second) ==
        std::get<Word>(inst.pairs[0].second));

  // A set-valued target comes back as an equal machine.
  derivational::RuleSystemInstance with_set = inst;
  with_set.pairs[0].second =
      make_word_set(inst.alphabet, {Word{}, inst.pairs[0].first});
  io::save_rules(tmp.file("rs"), with_set);
  derivational::RuleSystemInstance back2 = io::load_rules(tmp.file("rs"));
  CHECK(std::get<Wdfa>(back2.pairs[0].second) ==
        std::get<Wdfa>(with_set.pairs[0].second));

  // The round-tripped instance behaves identically.
  CHECK(derivational::orderable_sset(back).sequence ==
        derivational::orderable_sset(inst).sequence);
}

TEST_CASE("io: instance bundles round-trip and re-run") {
  TempDir tmp("instance");

  // A generation query with thresholds and attested data on board.
  GrammarSpec g = testutil::bits_grammar({"011", "110", "000"}, 3);
  reductions::Instance inst;
  inst.query = reductions::QueryKind::kRange;
  inst.grammar = g;
  inst.ranking = Ranking{{2, 0, 1}};
  inst.underlying = "u";
  inst.k1 = ViolationVector{{0, 0, 0}};
  inst.k2 = ViolationVector{{1, 1, 2}};
  inst.forms.push_back({"u", g.alphabet().parse_word("000")});
  inst.ssets.push_back(
      {"u", make_word_set(g.alphabet(), {g.alphabet().parse_word("011")})});
  inst.note = "three candidates over three bit positions";
  io::save_instance(tmp.file("i"), inst);

  reductions::Instance back = io::load_instance(tmp.file("i"));
  CHECK(back.query == inst.query);
  CHECK(*back.grammar == g);
  CHECK(back.ranking == inst.ranking);
  CHECK(back.underlying == "u");
  CHECK(*back.k1 == *inst.k1);
  CHECK(*back.k2 == *inst.k2);
  REQUIRE(back.forms.size() == 1);
  CHECK(back.forms[0].surface == inst.forms[0].surface);
  REQUIRE(back.ssets.size() == 1);
  CHECK(back.ssets[0].set == inst.ssets[0].set);
  CHECK(back.note == inst.note);
  CHECK(run_query(back).yes == run_query(inst).yes);

  // Encoded instances survive the trip with their answers intact.
  CnfFormula phi{3, {{{1, false}, {2, true}}, {{1, true}, {3, false}}}};
  reductions::Instance msa = reductions::gen_msa(phi);
  io::save_instance(tmp.file("msa"), msa);
  reductions::QueryOutcome a1 = run_query(msa);
  reductions::QueryOutcome a2 = run_query(io::load_instance(tmp.file("msa")));
  REQUIRE(a1.value.has_value());
  REQUIRE(a2.value.has_value());
  CHECK(a1.value->v == a2.value->v);

  reductions::Instance ham =
      reductions::gen_hamilton(Digraph{3, {{1, 2}, {2, 3}}}, true);
  io::save_instance(tmp.file("ham"), ham);
  CHECK(run_query(io::load_instance(tmp.file("ham"))).yes);

  reductions::Instance ord =
      reductions::gen_orderable_hamilton(Digraph{2, {{2, 1}}});
  io::save_instance(tmp.file("ord"), ord);
  CHECK(run_query(io::load_instance(tmp.file("ord"))).yes);
}

TEST_CASE("io: instance manifests reject malformed queries") {
  TempDir tmp("badinstance");
  fs::create_directories(tmp.file("q1"));
  write_text(tmp.file("q1") / "query.txt", "query nonsense\n");
  CHECK_THROWS_AS(io::load_instance(tmp.file("q1")), InputError);

  fs::create_directories(tmp.file("q2"));
  write_text(tmp.file("q2") / "query.txt", "underlying u\n");
  CHECK_THROWS_AS(io::load_instance(tmp.file("q2")), InputError);

  fs::create_directories(tmp.file("q3"));
  write_text(tmp.file("q3") / "query.txt", "query opt\nranking identity\n");
  CHECK_THROWS_AS(io::load_instance(tmp.file("q3")), InputError);

  fs::create_directories(tmp.file("q4"));
  write_text(tmp.file("q4") / "query.txt", "query opt\nfrobnicate\n");
  CHECK_THROWS_AS(io::load_instance(tmp.file("q4")), InputError);
}

TEST_CASE("io: violation vectors format plainly") {
  CHECK(io::format_values(ViolationVector{{}}) == "-");
  CHECK(io::format_values(ViolationVector{{5}}) == "5");
  CHECK(io::format_values(ViolationVector{{1, 0, 2}}) == "1 0 2");
}
