#ifndef RGS_VERSION_HPP
#define RGS_VERSION_HPP

namespace rgs {

const char* library_version();

}  // namespace rgs

#endif  // RGS_VERSION_HPP
