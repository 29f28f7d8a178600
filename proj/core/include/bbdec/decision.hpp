#pragma once

#include <string>

namespace bbdec {

enum class Verdict { kHalt, kNonHalt, kUnknown };

std::string ToString(Verdict v);

}  // namespace bbdec
