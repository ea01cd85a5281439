#pragma once

#include "sucoset/algebra.hpp"
#include "sucoset/coset.hpp"
#include "sucoset/errors.hpp"
#include "sucoset/frame.hpp"
#include "sucoset/golden_su2.hpp"
#include "sucoset/haar.hpp"
#include "sucoset/matrix.hpp"
#include "sucoset/random.hpp"
#include "sucoset/verify.hpp"

namespace sucoset {

inline constexpr const char* kVersion = "0.1.0";

} // namespace sucoset
