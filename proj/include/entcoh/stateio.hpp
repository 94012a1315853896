#pragma once

#include <string>
#include <variant>

#include "entcoh/entropy.hpp"
#include "entcoh/types.hpp"

namespace entcoh {

using StateFileContent = std::variant<PureState, DensityMatrix, OrthonormalBasis>;

// Plain-text state files: first line "<kind> <dims>" with kind one of
// pure | density | basis, then one "re im" pair per entry, row-major;
// basis files list their elements sequentially.
std::string serialize(const StateFileContent& content);
StateFileContent parse_state_text(const std::string& text);

StateFileContent load_state_file(const std::string& path);
void save_state_file(const std::string& path, const StateFileContent& content);

}  // namespace entcoh
