#pragma once

// Data files compiled into the library from data/.

#include <span>
#include <string_view>

namespace bookramsey {

struct EmbeddedFile {
  std::string_view name;  // path relative to data/
  std::string_view text;
};

std::span<const EmbeddedFile> embedded_files();
// Throws ArgumentError for an unknown name.
std::string_view embedded_file(std::string_view name);

}  // namespace bookramsey
