#ifndef UGAT_VERSION_HPP
#define UGAT_VERSION_HPP

namespace ugat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ugat

#endif
