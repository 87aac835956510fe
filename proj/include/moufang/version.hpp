#ifndef MOUFANG_VERSION_HPP
#define MOUFANG_VERSION_HPP

namespace moufang {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
