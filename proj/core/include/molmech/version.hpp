//
// Project molmech - Copyright 2026 molmech developers.
// SPDX-License-Identifier: Apache-2.0
//
#ifndef MOLMECH_VERSION_HPP
#define MOLMECH_VERSION_HPP

#include <string_view>

namespace molmech {

inline constexpr std::string_view kVersion = "0.1.0";

/// Identifier embedded in artifact manifests and checkpoint headers.
inline constexpr std::string_view kCodeVersion = "molmech-0.1.0";

}  // namespace molmech

#endif
