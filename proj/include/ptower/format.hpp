#pragma once

#include <string>

namespace ptower {

/// Locale-independent decimal formatting via std::to_chars. Precision 17
/// selects the shortest round-trip representation; 6..16 limit significant
/// digits. Throws std::domain_error outside [6, 17].
std::string format_double(double value, int precision = 17);

}  // namespace ptower
