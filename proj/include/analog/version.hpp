#pragma once

#include <string_view>

namespace analog {

std::string_view version() noexcept;

}  // namespace analog
