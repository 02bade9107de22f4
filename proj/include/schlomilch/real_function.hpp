#pragma once

#include <functional>

namespace schlomilch {

// x -> real. Non-finite return values are the out-of-domain sentinel.
using RealFunction = std::function<double(double)>;

}  // namespace schlomilch
