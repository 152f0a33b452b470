#ifndef HODGEFLOW_VERSION_HPP
#define HODGEFLOW_VERSION_HPP

namespace hodgeflow {

inline constexpr const char* kToolName = "hodgeflow";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace hodgeflow

#endif  // HODGEFLOW_VERSION_HPP
