#include "rankwb/jordan.hpp"

namespace rankwb {

std::vector<Index> jordan_tensor_blocks(Index s, Index t) {
  if (s < 1 || t < 1) throw InputError("jordan_tensor_blocks: sizes must be positive");
  if (s > t) std::swap(s, t);
  std::vector<Index> out;
  for (Index i = 1; i <= s; ++i) out.push_back(s + t + 1 - 2 * i);
  return out;
}

}  // namespace rankwb
