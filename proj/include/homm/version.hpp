#ifndef HOMM_VERSION_HPP
#define HOMM_VERSION_HPP

namespace homm {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
