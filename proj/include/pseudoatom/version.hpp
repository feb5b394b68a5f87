#pragma once

namespace pseudoatom {

inline constexpr const char* kVersion = "pseudoatom 0.1.0";

}  // namespace pseudoatom
