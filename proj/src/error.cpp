#include "cobcat/error.hpp"

namespace cobcat {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_perfect_matching: return "NotPerfectMatching";
    case Errc::orientation_clash: return "OrientationClash";
    case Errc::label_mismatch: return "LabelMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::boundary_mismatch: return "BoundaryMismatch";
    case Errc::label_set_mismatch: return "LabelSetMismatch";
    case Errc::prefix_mismatch: return "PrefixMismatch";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::slot_mismatch: return "SlotMismatch";
    case Errc::type_mismatch: return "TypeMismatch";
    case Errc::composition_type_mismatch: return "CompositionTypeMismatch";
    case Errc::not_compact: return "NotCompact";
    case Errc::law_violation: return "LawViolation";
    case Errc::overflow: return "OverflowError";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

Error::Error(Errc c, const std::string& msg)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace cobcat
