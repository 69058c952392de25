#include "analog/version.hpp"

namespace analog {

std::string_view version() noexcept { return ANALOG_VERSION; }

}  // namespace analog
