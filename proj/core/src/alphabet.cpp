#include "otrank/alphabet.hpp"

#include <cctype>

#include "otrank/errors.hpp"

namespace ot {

namespace {

bool has_whitespace(const std::string& s) {
  for (unsigned char c : s) {
    if (std::isspace(c)) return true;
  }
  return false;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  for (SymbolId id = 0; id < symbols_.size(); ++id) {
    const std::string& name = symbols_[id];
    if (name.empty()) throw InputError("alphabet: empty symbol name");
    if (name == "@")
      throw InputError("alphabet: \"@\" is reserved for the empty word");
    if (has_whitespace(name))
      throw InputError("alphabet: symbol name contains whitespace: \"" + name +
                       "\"");
    if (!index_.emplace(name, id).second)
      throw InputError("alphabet: duplicate symbol name: \"" + name + "\"");
  }
  if (!single_char_names()) {
    // Words over multi-character names are written '.'-separated, so the
    // separator may not appear inside a name.
    for (const std::string& name : symbols_) {
      if (name.find('.') != std::string::npos)
        throw InputError("alphabet: symbol name contains '.': \"" + name +
                         "\"");
    }
  }
}

Alphabet Alphabet::digits(unsigned r) {
  std::vector<std::string> names;
  names.reserve(r);
  for (unsigned i = 1; i <= r; ++i) names.push_back(std::to_string(i));
  return Alphabet(std::move(names));
}

Alphabet Alphabet::bits() { return Alphabet({"0", "1"}); }

Alphabet Alphabet::bits_padded() { return Alphabet({"0", "1", "2"}); }

const std::string& Alphabet::name(SymbolId id) const {
  if (id >= symbols_.size()) throw InputError("alphabet: symbol id range");
  return symbols_[id];
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SymbolId Alphabet::id(std::string_view name) const {
  auto found = find(name);
  if (!found)
    throw InputError("alphabet: unknown symbol \"" + std::string(name) + "\"");
  return *found;
}

bool Alphabet::single_char_names() const {
  for (const std::string& s : symbols_) {
    if (s.size() != 1) return false;
  }
  return true;
}

Word Alphabet::parse_word(std::string_view text) const {
  if (text == "@") return {};
  Word w;
  if (single_char_names()) {
    w.reserve(text.size());
    for (char c : text) w.push_back(id(std::string_view(&c, 1)));
    return w;
  }
  // Multi-character symbol names: '.'-separated.
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string_view tok = (dot == std::string_view::npos)
                               ? text.substr(pos)
                               : text.substr(pos, dot - pos);
    w.push_back(id(tok));
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return w;
}

std::string Alphabet::format_word(const Word& w) const {
  if (w.empty()) return "@";
  std::string out;
  bool plain = single_char_names();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !plain) out += '.';
    out += name(w[i]);
  }
  return out;
}

}  // namespace ot
