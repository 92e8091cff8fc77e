#ifndef PUSHPULL_VERSION_HPP
#define PUSHPULL_VERSION_HPP

namespace pushpull {

// Stamped into simulation reports and CLI output so archived results
// can be traced back to the code that produced them.
inline constexpr const char* kCodeVersion = "pushpull/1.0.0";
inline constexpr const char* kOutputSchemaVersion = "v1";

}  // namespace pushpull

#endif
