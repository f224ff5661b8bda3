#pragma once

namespace slabstack {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace slabstack
