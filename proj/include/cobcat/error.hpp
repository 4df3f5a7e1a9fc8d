#pragma once

#include <stdexcept>
#include <string>

namespace cobcat {

// Failure categories surfaced by validation and law checking.
enum class Errc {
  not_perfect_matching,
  orientation_clash,
  label_mismatch,
  index_out_of_range,
  boundary_mismatch,
  label_set_mismatch,
  prefix_mismatch,
  unknown_label,
  slot_mismatch,
  type_mismatch,
  composition_type_mismatch,
  not_compact,
  law_violation,
  overflow,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Malformed input documents (distinct from semantic validation failures so
// the command line tool can map them to a separate exit status).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] void fail(Errc c, const std::string& msg);

inline void require(bool ok, Errc c, const char* msg) {
  if (!ok) fail(c, msg);
}

inline void require(bool ok, Errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

}  // namespace cobcat
