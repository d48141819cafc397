#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace cpctaxo {

// Writes to a temporary sibling and renames it into place. Throws IoFailure.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

// Throws IoFailure.
std::string read_file(const std::filesystem::path& path);

}  // namespace cpctaxo
