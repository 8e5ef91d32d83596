#pragma once

namespace ramsey {

inline constexpr const char* kEngineVersion = "0.1.0";

} // namespace ramsey
