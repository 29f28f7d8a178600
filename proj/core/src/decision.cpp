#include "bbdec/decision.hpp"

namespace bbdec {

std::string ToString(Verdict v) {
  switch (v) {
    case Verdict::kHalt:
      return "halt";
    case Verdict::kNonHalt:
      return "nonhalt";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace bbdec
