#ifndef ANCLAB_ERRORS_HPP
#define ANCLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace anclab {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Rejected input: malformed files, forests outside the requested family,
// labels outside the label space. Maps to exit code 2 in the CLI.
class validation_error : public error {
public:
  enum class kind {
    cycle_detected,
    unknown_parent,
    depth_exceeded,
    duplicate_id,
    bad_argument,
    malformed_input,
    out_of_range,
  };

  validation_error(kind k, const std::string& what) : error(what), kind_(k) {}
  kind error_kind() const noexcept { return kind_; }

private:
  kind kind_;
};

// A violated internal invariant. The labeling procedure carries proofs that
// these conditions hold, so seeing one means the implementation is broken,
// not the input. Maps to exit code 3 in the CLI.
class internal_error : public error {
public:
  using error::error;
};

namespace detail {
[[noreturn]] void throw_internal(const char* expr, const char* file, int line);
}

// Always-on invariant check (independent of NDEBUG).
#define ANCLAB_CHECK(expr)                                              \
  do {                                                                  \
    if (!(expr)) ::anclab::detail::throw_internal(#expr, __FILE__, __LINE__); \
  } while (0)

}  // namespace anclab

#endif
