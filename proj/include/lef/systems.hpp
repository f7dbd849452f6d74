#pragma once

#include "lef/rewrite.hpp"

namespace lef {

  //! Termination order shared by the preset systems: a < c < e < b < x.
  Alphabet const& acebx();

  //! Nine schema groups for Q (the first one split into 1a-1d).
  RewriteSystem const& q_system();

  //! The finite quotient system F_n over {a, b, c, e, x}; n >= 1.
  RewriteSystem fn_system(long n);

  //! e^m -> e over {a, b, c, e, x}: normal forms of S_m.
  RewriteSystem sm_system(long m);

}  // namespace lef
