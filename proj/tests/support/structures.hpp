#pragma once

#include <string>
#include <vector>

#include "pspec/parse.hpp"
#include "pspec/structure.hpp"

namespace fixtures {

// The four bundled structures, built from text so the tests do not depend on
// the data directory.
inline pspec::PoissonStructure qmat() {
  return pspec::parse_structure(
      "vars: x1 x2 x3 x4\n"
      "pair: s = x1*x4 - x2*x3 ; t = 1\n"
      "pair: s = x2 ; t = x3\n");
}

inline pspec::PoissonStructure symm() {
  return pspec::parse_structure(
      "vars: x1 x2 x3 x4\n"
      "pair: s = x1 + x2 + x3 + x4 ; t = 1\n"
      "pair: s = x1*x2 + x1*x3 + x1*x4 + x2*x3 + x2*x4 + x3*x4 ; t = 1\n");
}

inline pspec::PoissonStructure det_minor() {
  return pspec::parse_structure(
      "vars: x1 x2 x3 x4\n"
      "pair: s = x1*x4 - x2*x3 ; t = 1\n"
      "pair: s = x2*x3 ; t = 1\n");
}

inline pspec::PoissonStructure pencil_null() {
  return pspec::parse_structure(
      "vars: x1 x2 x3 x4\n"
      "pair: s = x1 + x2 + x3 + x4 ; t = 1\n"
      "pair: s = x1 + x4 ; t = x2 + x3\n");
}

struct Named {
  std::string name;
  pspec::PoissonStructure structure;
};

inline std::vector<Named> all() {
  return {{"qmat", qmat()}, {"symm", symm()}, {"det-minor", det_minor()}, {"pencil-null", pencil_null()}};
}

inline pspec::Poly P(const pspec::PoissonStructure& s, const std::string& text) {
  return pspec::parse_poly(text, s.names());
}

}  // namespace fixtures
