#pragma once

// Two small games with everything in closed form, used as references for
// the oracles and the simulations.
//
// example1: d = 2, A = 2, K is the segment between m_dagger (nu = 1) and
//   m_sharp (nu = 0); C is the negative orthant with l_inf expansions.
// example2: d = 1, A = 2, K = [-1, 1]^2 (columns v and w); C = {0}.

#include "approach/geometry.hpp"
#include "approach/param_space.hpp"

namespace approach {

namespace example1 {

PayoffMatrix m_dagger();
PayoffMatrix m_sharp();
/// nu * m_dagger + (1 - nu) * m_sharp.
PayoffMatrix at(double nu);
ParamSpace space();
TargetSet target();

/// Distance of the constant play (x, 1 - x) to the orthant.
double alpha(double x, double nu);
double phi_star(double nu);
double cav_phi_star(double nu);
double phi_xstar(double nu);
MixedAction xstar(double nu);

}  // namespace example1

namespace example2 {

PayoffMatrix at(double v, double w);
ParamSpace space();
TargetSet target();

double phi_star(double v, double w);
double cav_phi_star(double v, double w);
double phi_xstar(double v, double w);
/// Target of constantly playing (1/2, 1/2).
double alpha_half(double v, double w);
MixedAction xstar(double v, double w);

}  // namespace example2

}  // namespace approach
