#pragma once

#include <span>
#include <vector>

#include "hkb/formula.hpp"
#include "hkb/interpretation.hpp"
#include "hkb/program.hpp"

namespace hkb {

// Classical satisfaction I |= f for an objective formula.
bool eval_first_order(const Interpretation& i, const Formula& f);

// MKNF satisfaction at the structure (i, m, n): K psi holds iff psi holds at
// (j, m, n) for every j in m; not psi holds iff psi fails at (j, m, n) for some
// j in n. Both m and n may be empty.
bool eval_mknf(const Interpretation& i, const InterpretationSet& m,
               const InterpretationSet& n, const Formula& f);

// Truth of a sentence in the set m: (i, m, m) |= f for every member i.
// Vacuously true for the empty set.
bool holds_in(const InterpretationSet& m, const Formula& f);

// All worlds satisfying every formula of the first-order theory, by exhaustive
// enumeration. Empty when unsatisfiable.
InterpretationSet models_of(std::span<const Formula> theory, SignatureRef sig,
                            int max_atoms = kDefaultAtomBudget);

// The MKNF rendering of a hybrid knowledge base: K f per ontology formula, and
// per rule the implication from its body modal atoms to its K-head.
std::vector<Formula> translate_kb(std::span<const Formula> ontology,
                                  const GroundProgram& program);

namespace detail {

// f must be objective; no signature checks. The hot path of models_of.
bool eval_on_world(const Formula& f, WorldMask world);

}  // namespace detail

}  // namespace hkb
