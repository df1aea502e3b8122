#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockinv/design.hpp"
#include "blockinv/eval.hpp"

namespace blockinv {

// Named designs:
//   ottaviani15      degree-15 invariant of cubics in 5 variables, the
//                    15-point design with the dihedral symmetry group
//   ottaviani15-alt  same blocks with each tuple sorted ascending
//   aronhold         the classical ternary-cubic S-invariant (tetrahedron)
//   clebsch542       degree-6 invariant for the (5,4,2) secant case
//   design943        degree-10 invariant for the (9,4,3) secant case
//   quadric:<n>      determinant of a quadratic form in n+1 variables
//   catalecticant:<k> binary catalecticant, complete graph with doubled edges
// Named form sets:
//   paper8           the fixed eight integer vectors in dimension 5
std::optional<BlockDesign> find_design_preset(const std::string& name);

std::optional<FormSet> find_form_preset(const std::string& name);

std::vector<std::string> design_preset_names();

FormSet paper8_forms();

BlockDesign ottaviani15();
BlockDesign ottaviani15_alt();
BlockDesign aronhold();
BlockDesign clebsch542();
BlockDesign design943();
BlockDesign quadric(int n);
BlockDesign catalecticant(int k);

}  // namespace blockinv
