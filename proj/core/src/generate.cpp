#include "otrank/generate.hpp"

#include "otrank/errors.hpp"

namespace ot::generate {

WinnowResult winnow(const GrammarSpec& g, const Ranking& r,
                    const std::string& underlying, const Limits& limits) {
  r.validate(g.num_constraints());
  Wdfa current = g.gen(underlying);
  if (is_empty(current))
    throw InputError("winnow: empty candidate set for \"" + underlying + "\"");
  ViolationVector values;
  values.v.reserve(r.order.size());
  for (ConstraintId id : r.order) {
    Wdfa product =
        intersect(current, g.constraints().machine(id), limits.state_limit);
    PathWeight w = min_accepting_weight(product);
    if (w.is_infinite())
      throw InputError("winnow: constraint \"" + g.constraints().name(id) +
                       "\" rejects every remaining candidate");
    values.v.push_back(w.value());
    current = prune_to_optimal(product);
  }
  return {std::move(current), std::move(values)};
}

Wdfa opt(const GrammarSpec& g, const Ranking& r, const std::string& underlying,
         const Limits& limits) {
  return winnow(g, r, underlying, limits).optimum;
}

ViolationVector opt_val(const GrammarSpec& g, const Ranking& r,
                        const std::string& underlying, const Limits& limits) {
  return winnow(g, r, underlying, limits).values;
}

bool opt_val_z(const GrammarSpec& g, const Ranking& r,
               const std::string& underlying, const Limits& limits) {
  ViolationVector values = opt_val(g, r, underlying, limits);
  if (values.v.empty())
    throw InputError("opt_val_z: grammar has no constraints");
  return values.v.back() == 0;
}

bool beatable(const GrammarSpec& g, const Ranking& r,
              const std::string& underlying, const ViolationVector& k,
              const Limits& limits) {
  if (k.v.size() != g.num_constraints())
    throw InputError("beatable: threshold arity mismatch");
  return opt_val(g, r, underlying, limits) < k;
}

bool best(const GrammarSpec& g, const Ranking& r,
          const std::string& underlying, const ViolationVector& k,
          const Limits& limits) {
  if (k.v.size() != g.num_constraints())
    throw InputError("best: threshold arity mismatch");
  return opt_val(g, r, underlying, limits) == k;
}

bool range(const GrammarSpec& g, const Ranking& r,
           const std::string& underlying, const ViolationVector& k1,
           const ViolationVector& k2, const Limits& limits) {
  if (k1.v.size() != g.num_constraints() || k2.v.size() != g.num_constraints())
    throw InputError("range: threshold arity mismatch");
  ViolationVector values = opt_val(g, r, underlying, limits);
  return k1 <= values && values <= k2;
}

ViolationVector evaluate(const GrammarSpec& g, const Ranking& r,
                         const Word& surface) {
  r.validate(g.num_constraints());
  ViolationVector values;
  values.v.reserve(r.order.size());
  for (ConstraintId id : r.order) {
    PathWeight w = weigh(g.constraints().machine(id), surface);
    if (w.is_infinite())
      throw InputError("evaluate: constraint \"" + g.constraints().name(id) +
                       "\" rejects the word");
    values.v.push_back(w.value());
  }
  return values;
}

bool check(const GrammarSpec& g, const Ranking& r, const AttestedForm& form,
           const Limits& limits) {
  if (weigh(g.gen(form.underlying), form.surface).is_infinite())
    throw InputError("check: surface form is not a candidate for \"" +
                     form.underlying + "\"");
  WinnowResult w = winnow(g, r, form.underlying, limits);
  return evaluate(g, r, form.surface) == w.values;
}

bool check_sset(const GrammarSpec& g, const Ranking& r,
                const AttestedSurfaceSet& sset, const Limits& limits) {
  if (!is_zero_weight(sset.set))
    throw InputError("check_sset: attested set must be zero-weight");
  if (sset.set.alphabet() != g.alphabet())
    throw InputError("check_sset: attested set alphabet mismatch");
  Wdfa feasible =
      intersect(sset.set, g.gen(sset.underlying), limits.state_limit);
  // No member of the set is even a candidate: the check fails outright.
  if (is_empty(feasible)) return false;
  Wdfa optimum = opt(g, r, sset.underlying, limits);
  return !is_empty(intersect(optimum, sset.set, limits.state_limit));
}

}  // namespace ot::generate
