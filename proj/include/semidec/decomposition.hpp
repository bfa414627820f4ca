// semidec - binary quasiorder and semilattice decomposition of finite
// semigroups.

#ifndef SEMIDEC_DECOMPOSITION_HPP_
#define SEMIDEC_DECOMPOSITION_HPP_

#include <vector>  // for vector

#include "quasiorder.hpp"
#include "semigroup.hpp"

namespace semidec {

  //! S as a semilattice S/⇕ of the ⇕-classes.
  struct TamuraDecomposition {
    Partition         classes;
    Quotient          quotient;
    BinaryRelation    order;  // natural order of the quotient semilattice
    std::vector<bool> class_is_two_trivial;
  };

  TamuraDecomposition decompose(Semigroup const& S);

}  // namespace semidec

#endif  // SEMIDEC_DECOMPOSITION_HPP_
