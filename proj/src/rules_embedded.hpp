#pragma once

#include <string_view>

namespace lct::detail {

// Bundled rule text for a supported language, or nullptr.
const char* embedded_rules(std::string_view language);

}  // namespace lct::detail
