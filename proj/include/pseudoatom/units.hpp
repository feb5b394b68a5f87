#pragma once

namespace pseudoatom {

// CODATA value, pinned so that emitted tables are reproducible bit-for-bit.
inline constexpr double kHartreeInEv = 27.211386245988;

inline constexpr double hartree_to_ev(double e_hartree) {
  return e_hartree * kHartreeInEv;
}

}  // namespace pseudoatom
