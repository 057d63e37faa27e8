#pragma once

// Umbrella header: exact differential algebra over Q(zeta_N)(x) at desk
// scale. Pulls in the field tower, matrix systems and gauge calculus,
// delta-torsors, finite Hopf-Galois descent, cocycle cohomology, and
// differential central simple algebras, plus the JSON fixture layer.

#include "pvkit/classify.hpp"
#include "pvkit/cocycle.hpp"
#include "pvkit/cyclo.hpp"
#include "pvkit/dcsa.hpp"
#include "pvkit/factor.hpp"
#include "pvkit/hopf.hpp"
#include "pvkit/io.hpp"
#include "pvkit/linsys.hpp"
#include "pvkit/matrix.hpp"
#include "pvkit/parse.hpp"
#include "pvkit/partfrac.hpp"
#include "pvkit/phi.hpp"
#include "pvkit/poly.hpp"
#include "pvkit/ratfunc.hpp"
#include "pvkit/torsor.hpp"
#include "pvkit/util.hpp"
