#include "otrank/grammar.hpp"

#include <algorithm>
#include <set>

#include "otrank/errors.hpp"

namespace ot {

Ranking Ranking::identity(std::uint32_t n) {
  Ranking r;
  r.order.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) r.order[i] = i;
  return r;
}

void Ranking::validate(std::uint32_t n) const {
  if (order.size() != n)
    throw InputError("ranking: expected " + std::to_string(n) +
                     " constraints, got " + std::to_string(order.size()));
  std::vector<char> seen(n, 0);
  for (ConstraintId id : order) {
    if (id >= n || seen[id]) throw InputError("ranking: not a permutation");
    seen[id] = 1;
  }
}

std::vector<std::uint32_t> Ranking::positions(std::uint32_t n) const {
  validate(n);
  std::vector<std::uint32_t> pos(n);
  for (std::uint32_t k = 0; k < n; ++k) pos[order[k]] = k;
  return pos;
}

int ViolationVector::compare(const ViolationVector& a,
                             const ViolationVector& b) {
  if (a.v.size() != b.v.size())
    throw InputError("violation vectors have different arity");
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    if (a.v[i] < b.v[i]) return -1;
    if (a.v[i] > b.v[i]) return 1;
  }
  return 0;
}

GrammarSpec::GrammarSpec(Alphabet alphabet,
                         std::vector<std::pair<std::string, Wdfa>> gens,
                         ConstraintSet constraints)
    : alphabet_(std::move(alphabet)),
      gens_(std::move(gens)),
      constraints_(std::move(constraints)) {
  std::set<std::string> keys;
  for (const auto& [key, machine] : gens_) {
    if (!keys.insert(key).second)
      throw InputError("grammar: duplicate underlying key \"" + key + "\"");
    if (machine.alphabet() != alphabet_)
      throw InputError("grammar: candidate alphabet mismatch for \"" + key +
                       "\"");
    if (!is_zero_weight(machine))
      throw InputError("grammar: candidate set for \"" + key +
                       "\" must be zero-weight");
  }
  if (constraints_.size() > 0 && constraints_.alphabet() != alphabet_)
    throw InputError("grammar: constraint alphabet mismatch");
}

bool GrammarSpec::has_gen(const std::string& key) const {
  for (const auto& [k, machine] : gens_)
    if (k == key) return true;
  return false;
}

const Wdfa& GrammarSpec::gen(const std::string& key) const {
  for (const auto& [k, machine] : gens_)
    if (k == key) return machine;
  throw InputError("grammar: unknown underlying key \"" + key + "\"");
}

}  // namespace ot
