#pragma once

#include <cstddef>
#include <string_view>

namespace ringlab {

inline constexpr std::size_t kDefaultCarrierCap = 256;

/// Upper bound on the carrier size of any ring or module the engine will
/// build or enumerate. Starts at kDefaultCarrierCap, or at RINGLAB_CAP when
/// that environment variable holds a positive integer.
std::size_t carrier_cap();
void set_carrier_cap(std::size_t cap);

/// Throws Error(CapExceeded) when `size` exceeds the current cap.
void check_cap(std::size_t size, std::string_view what);

}  // namespace ringlab
