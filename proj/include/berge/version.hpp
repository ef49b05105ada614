#ifndef BERGE_VERSION_HPP
#define BERGE_VERSION_HPP

namespace berge {

inline constexpr const char* version_string = "berge 0.1.0";

} // namespace berge

#endif
