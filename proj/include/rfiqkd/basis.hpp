#ifndef RFIQKD_BASIS_HPP
#define RFIQKD_BASIS_HPP

#include <array>
#include <cstddef>
#include <string_view>

namespace rfiqkd {

enum class Basis { Z, X, Y };

/// (Alice preparation, Bob measurement) basis combination. Only these five
/// combinations enter the analysis; ZZ is the key-generating pair, the four
/// X/Y pairs feed the frame-drift correlator.
enum class BasisPair { ZZ, XX, XY, YX, YY };

inline constexpr std::array<BasisPair, 5> kAllBasisPairs = {
    BasisPair::ZZ, BasisPair::XX, BasisPair::XY, BasisPair::YX, BasisPair::YY};

inline constexpr std::size_t index_of(BasisPair p) {
  return static_cast<std::size_t>(p);
}

constexpr Basis alice_basis(BasisPair p) {
  switch (p) {
    case BasisPair::ZZ: return Basis::Z;
    case BasisPair::XX:
    case BasisPair::XY: return Basis::X;
    default: return Basis::Y;
  }
}

constexpr Basis bob_basis(BasisPair p) {
  switch (p) {
    case BasisPair::ZZ: return Basis::Z;
    case BasisPair::XX:
    case BasisPair::YX: return Basis::X;
    default: return Basis::Y;
  }
}

constexpr std::string_view to_string(BasisPair p) {
  switch (p) {
    case BasisPair::ZZ: return "ZZ";
    case BasisPair::XX: return "XX";
    case BasisPair::XY: return "XY";
    case BasisPair::YX: return "YX";
    default: return "YY";
  }
}

}  // namespace rfiqkd

#endif
