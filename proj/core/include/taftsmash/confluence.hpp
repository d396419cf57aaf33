#pragma once

#include <string>

#include "taftsmash/presentation.hpp"

namespace taftsmash {

struct ConfluenceReport {
  bool ok = true;
  int overlaps_checked = 0;
  std::string first_failure;
};

/// Diamond-lemma check that the declared monomial basis is a basis: every
/// overlap word z*y*x of three pairwise-misordered generators, and every
/// overlap of a swap rule with a power rule, must resolve to the same normal
/// form regardless of which rule fires first.
template <class Coeff>
ConfluenceReport verify_confluence(const PresPtr<Coeff>& p) {
  using Elem = BasicNCElem<Coeff>;
  ConfluenceReport rep;
  auto elem_of_rule = [&](const typename BasicPresentation<Coeff>::Terms& t) {
    Elem acc = Elem::zero(p);
    for (const auto& [e, c] : t) acc = acc + Elem::monomial(p, e, c);
    return acc;
  };
  auto fail = [&](const std::string& what) {
    if (rep.ok) {
      rep.ok = false;
      rep.first_failure = what;
    }
  };

  int n = static_cast<int>(p->num_gens());
  for (int z = 2; z < n && rep.ok; ++z) {
    for (int y = 1; y < z && rep.ok; ++y) {
      for (int x = 0; x < y && rep.ok; ++x) {
        Elem first = elem_of_rule(p->swap_rules.at({z, y})) * Elem::generator(p, x);
        Elem second = Elem::generator(p, z) * elem_of_rule(p->swap_rules.at({y, x}));
        ++rep.overlaps_checked;
        if (first != second)
          fail("overlap " + p->generators[static_cast<size_t>(z)] + "*" +
               p->generators[static_cast<size_t>(y)] + "*" + p->generators[static_cast<size_t>(x)] +
               " resolves inconsistently");
      }
    }
  }

  for (const auto& [h, pr] : p->power_rules) {
    if (!rep.ok) break;
    Elem repl = elem_of_rule(pr.replacement);
    ExpVec run(p->num_gens(), 0u);
    run[static_cast<size_t>(h)] = pr.exponent - 1;
    Elem h_run = Elem::monomial(p, run, p->one);
    for (int y = 0; y < h && rep.ok; ++y) {
      // h^p * y: truncate first vs swap the trailing pair first
      Elem first = repl * Elem::generator(p, y);
      Elem second = h_run * elem_of_rule(p->swap_rules.at({h, y}));
      ++rep.overlaps_checked;
      if (first != second)
        fail("overlap " + p->generators[static_cast<size_t>(h)] + "^" + std::to_string(pr.exponent) +
             "*" + p->generators[static_cast<size_t>(y)] + " resolves inconsistently");
    }
    for (int z = h + 1; z < n && rep.ok; ++z) {
      // z * h^p: truncate first vs swap the leading pair first
      Elem first = Elem::generator(p, z) * repl;
      Elem second = elem_of_rule(p->swap_rules.at({z, h})) * h_run;
      ++rep.overlaps_checked;
      if (first != second)
        fail("overlap " + p->generators[static_cast<size_t>(z)] + "*" +
             p->generators[static_cast<size_t>(h)] + "^" + std::to_string(pr.exponent) +
             " resolves inconsistently");
    }
  }
  return rep;
}

}  // namespace taftsmash
