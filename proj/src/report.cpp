#include "rgs/version.hpp"

namespace rgs {

const char* library_version() { return "0.1.0"; }

}  // namespace rgs
