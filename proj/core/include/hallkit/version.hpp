#pragma once

namespace hallkit {

inline constexpr const char* kLibraryVersion = "1.0.0";
inline constexpr const char* kCertificateSchemaVersion = "1";

}
