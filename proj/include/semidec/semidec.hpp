// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#ifndef SEMIDEC_SEMIDEC_HPP_
#define SEMIDEC_SEMIDEC_HPP_

#include "catalog.hpp"
#include "decomposition.hpp"
#include "error.hpp"
#include "homs.hpp"
#include "ideals.hpp"
#include "io.hpp"
#include "oracles.hpp"
#include "parallel.hpp"
#include "predicates.hpp"
#include "quasiorder.hpp"
#include "semigroup.hpp"
#include "witness.hpp"

#endif  // SEMIDEC_SEMIDEC_HPP_
