#ifndef PCW_VERSION_HPP
#define PCW_VERSION_HPP

namespace pcw {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pcw

#endif  // PCW_VERSION_HPP
