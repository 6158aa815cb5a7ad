#include "shgbeta/diagrams.hpp"

#include "shgbeta/errors.hpp"

namespace shgbeta {

namespace {

// The three fixed patterns, indexed by ordering id. Ordering 0 absorbs twice
// then emits; 1 absorbs, emits, absorbs; 2 emits first. The Cartesian slot
// layout and denominator multiples follow the matching amplitude term.
struct OrderingSpec {
  std::array<Vertex, 3> events;
  std::array<int, 3> pattern;  // slot (0=i,1=j,2=k) per numerator factor
  int mult_r;
  int mult_s;
  const char* pattern_name;
};

constexpr OrderingSpec kOrderings[3] = {
    {{Vertex::absorb_omega, Vertex::absorb_omega, Vertex::emit_2omega},
     {0, 1, 2},
     +2,
     +1,
     "ijk"},
    {{Vertex::absorb_omega, Vertex::emit_2omega, Vertex::absorb_omega},
     {1, 0, 2},
     -1,
     +1,
     "jik"},
    {{Vertex::emit_2omega, Vertex::absorb_omega, Vertex::absorb_omega},
     {1, 2, 0},
     -1,
     -2,
     "jki"},
};

}  // namespace

std::vector<TimeOrdering> enumerate_orderings() {
  std::vector<TimeOrdering> out;
  out.reserve(3);
  for (int id = 0; id < 3; ++id) out.push_back({id, kOrderings[id].events});
  return out;
}

std::vector<Term> enumerate_terms(int levels, Representation rep) {
  if (levels < 1) throw ValidationError("enumerate_terms: levels must be >= 1");
  std::vector<Term> out;
  for (int ordering = 0; ordering < 3; ++ordering) {
    const OrderingSpec& spec = kOrderings[ordering];
    for (int r = 0; r < levels; ++r)
      for (int s = 0; s < levels; ++s) {
        // In the fluctuation representation the 0->0 moment vanishes
        // identically, so any term whose numerator touches it is dropped.
        if (rep == Representation::fluctuation && (r == 0 || s == 0)) continue;
        out.push_back(Term{ordering,
                           r,
                           s,
                           spec.pattern,
                           {DenominatorFactor{r, spec.mult_r},
                            DenominatorFactor{s, spec.mult_s}}});
      }
  }
  return out;
}

std::vector<Term> enumerate_terms(const MolecularModel& m) {
  return enumerate_terms(static_cast<int>(m.levels()), m.representation());
}

long term_count(int levels, Representation rep) {
  return static_cast<long>(enumerate_terms(levels, rep).size());
}

const char* pattern_string(int ordering) {
  return kOrderings[ordering % 3].pattern_name;
}

}  // namespace shgbeta
