#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "bmvoa/code/linear_code.hpp"

namespace bmvoa::code {

/// Parses one 0/1 codeword per line; blank lines and `#` comments are
/// skipped. The result is the span of the listed words. Throws
/// std::invalid_argument on ragged or malformed lines.
LinearCode parse_code_text(std::string_view text);
LinearCode load_code_file(const std::filesystem::path& path);

/// `{length, dim, basis:[...]}` with basis words as 0/1 strings.
nlohmann::ordered_json code_to_json(const LinearCode& code);

}  // namespace bmvoa::code
