#pragma once

namespace mb {

// Engine version; participates in result-cache keys so stale cache entries
// from older engines are never served.
inline constexpr const char* engine_version = "mb-0.1.0";

}  // namespace mb
