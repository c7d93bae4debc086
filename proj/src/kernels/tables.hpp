#pragma once

#include "ins/kernels.hpp"

namespace ins::kernels::detail {

extern const KernelTable kScalarTable;
#if INS_HAVE_AVX2
extern const KernelTable kAvx2Table;
#endif

}  // namespace ins::kernels::detail
