#ifndef OTRANK_ALPHABET_HPP
#define OTRANK_ALPHABET_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ot {

using SymbolId = std::uint32_t;

// A word is a sequence of symbol ids over some alphabet.
using Word = std::vector<SymbolId>;

// An ordered set of distinct symbol names.  Ids are positions (0-based).
// The reserved token "@" denotes the empty word in all text formats and is
// not a legal symbol name.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  // Alphabet {"1", "2", ..., to_string(r)}.
  static Alphabet digits(unsigned r);
  // Alphabet {"0", "1"}.
  static Alphabet bits();
  // Alphabet {"0", "1", "2"}.
  static Alphabet bits_padded();

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(SymbolId id) const;
  const std::vector<std::string>& names() const { return symbols_; }

  std::optional<SymbolId> find(std::string_view name) const;
  SymbolId id(std::string_view name) const;  // throws InputError if absent

  // Text <-> Word.  "@" parses to the empty word.  If every symbol name is a
  // single character, words are written/read without separators ("581");
  // otherwise symbols are separated by '.' ("sym1.sym2").
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_;
  }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  bool single_char_names() const;

  std::vector<std::string> symbols_;
  std::map<std::string, SymbolId, std::less<>> index_;
};

}  // namespace ot

#endif  // OTRANK_ALPHABET_HPP
