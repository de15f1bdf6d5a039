#ifndef RCF_VERSION_HPP
#define RCF_VERSION_HPP

namespace rcf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rcf

#endif
