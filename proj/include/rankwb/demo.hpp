#pragma once

// End-to-end run over the bundled corpus: regular reps, certification,
// amplification and boosting, the combiner, reduction mod p, the extension
// example, commutator witnesses and the Folner patch.

#include <string>
#include <vector>

#include "rankwb/io.hpp"

namespace rankwb::demo {

enum class Status { pass, fail, skipped };

const char* to_string(Status s);

struct Row {
  std::string id;
  std::string check;
  std::string value;
  std::string expected;
  Status status = Status::pass;
  std::string note;  // e.g. "budget" for a skipped boost
};

struct Summary {
  FieldSpec field;
  Index budget = 0;
  std::vector<Row> rows;

  bool all_pass() const;
  io::Json json() const;
};

/// Runs every step over `field` (rows whose input is rational by nature, such
/// as reduction mod p, always start from Q). Any unexpected exception aborts.
Summary run(const FieldSpec& field, Index budget);

}  // namespace rankwb::demo
