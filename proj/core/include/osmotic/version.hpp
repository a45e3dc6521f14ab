#pragma once

namespace osmotic {

inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace osmotic
