#ifndef OTRANK_TESTS_HELPERS_HPP
#define OTRANK_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "otrank/grammar.hpp"
#include "otrank/wdfa.hpp"

namespace testutil {

// Every word over `a` of length 0..max_len, in length-then-lex order.
inline std::vector<ot::Word> all_words(const ot::Alphabet& a,
                                       std::size_t max_len) {
  std::vector<ot::Word> out = {{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (ot::SymbolId s = 0; s < a.size(); ++s) {
        ot::Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

// A grammar over {0,1} with one candidate set "u" holding `words` and one
// position constraint per bit, named like "p1".."pr", charging bit = 1.
inline ot::GrammarSpec bits_grammar(const std::vector<std::string>& words,
                                    std::uint32_t positions) {
  ot::Alphabet a = ot::Alphabet::bits();
  std::vector<ot::Word> parsed;
  for (const std::string& w : words) parsed.push_back(a.parse_word(w));
  std::vector<std::pair<std::string, ot::Wdfa>> gens;
  gens.emplace_back("u", ot::make_word_set(a, parsed));
  std::vector<ot::Constraint> cs;
  for (std::uint32_t i = 1; i <= positions; ++i) {
    cs.push_back({"p" + std::to_string(i),
                  ot::constraints::make_bit(a, i, /*want_one=*/false)});
  }
  return ot::GrammarSpec(a, std::move(gens),
                         ot::ConstraintSet(a, std::move(cs)));
}

}  // namespace testutil

#endif  // OTRANK_TESTS_HELPERS_HPP
