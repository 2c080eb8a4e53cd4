#pragma once

namespace sphom {

// Bumping either tag invalidates every on-disk cache record.
inline constexpr const char* kEngineVersion = "sphom/0.1.0";
inline constexpr const char* kSymfuncFormat = "SYMFUNC v1";

}  // namespace sphom
