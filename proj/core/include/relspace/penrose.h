#ifndef RELSPACE_PENROSE_H_
#define RELSPACE_PENROSE_H_

#include "relspace/space.h"

namespace relspace {

// Four flights I..IV of n steps each, labelled I1..In, II1..IVn.  move_up
// goes to the next step, from IVn back to I1; move_down is its converse.
// Throws kScene for n < 1.
Scene build_penrose(int n);

}  // namespace relspace

#endif  // RELSPACE_PENROSE_H_
