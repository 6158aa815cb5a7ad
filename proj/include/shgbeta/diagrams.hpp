#pragma once

#include <array>
#include <vector>

#include "shgbeta/model.hpp"

namespace shgbeta {

enum class Vertex { absorb_omega, emit_2omega };

/// One chronological ordering of the two absorption events and the single
/// emission event. Exactly three exist; id 0 places the emission last.
struct TimeOrdering {
  int id;
  std::array<Vertex, 3> events;
};

struct DenominatorFactor {
  int level;     // actual state index of r or s
  int multiple;  // photon-energy multiple added, one of {+2, +1, -1, -2}
};

/// One state-sequence contribution: the numerator always reads
/// mu^{0r} mu^{rs} mu^{s0}; pattern[f] names the Cartesian slot (0=i, 1=j,
/// 2=k) carried by numerator factor f, left to right.
struct Term {
  int ordering;
  int r;
  int s;
  std::array<int, 3> pattern;
  std::array<DenominatorFactor, 2> denominators;
};

/// The three time orderings, ids 0..2, in a fixed deterministic order.
std::vector<TimeOrdering> enumerate_orderings();

/// All state sequences for an L-level system, sorted by (ordering, r, s).
/// In the fluctuation representation, terms whose numerator contains the
/// structurally vanishing 0->0 moment (r = 0 or s = 0) are pruned.
std::vector<Term> enumerate_terms(int levels, Representation rep);
std::vector<Term> enumerate_terms(const MolecularModel& m);

/// Term count obtained by enumeration (not by closed formula).
long term_count(int levels, Representation rep);

/// "ijk", "jik" or "jki": the slot names in numerator order.
const char* pattern_string(int ordering);

}  // namespace shgbeta
