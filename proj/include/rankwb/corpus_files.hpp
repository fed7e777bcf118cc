#pragma once

// The bundled corpus rendered in the file formats the CLI reads. The shipped
// corpus/ directory is produced by rankwb_corpus and tested against this.

#include <string>
#include <utility>
#include <vector>

#include "rankwb/io.hpp"

namespace rankwb::corpus {

/// (file name, document) in a fixed order.
std::vector<std::pair<std::string, io::Json>> documents();

}  // namespace rankwb::corpus
