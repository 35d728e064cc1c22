#include "anclab/errors.hpp"

namespace anclab::detail {

void throw_internal(const char* expr, const char* file, int line) {
  throw internal_error(std::string("internal invariant violated: ") + expr +
                       " at " + file + ":" + std::to_string(line));
}

}  // namespace anclab::detail
