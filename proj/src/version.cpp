#include "arithseq/version.hpp"

#ifndef ARITHSEQ_GIT_REV
#define ARITHSEQ_GIT_REV "unknown"
#endif

namespace arithseq {

const char* version() { return "0.1.0+" ARITHSEQ_GIT_REV; }

}  // namespace arithseq
