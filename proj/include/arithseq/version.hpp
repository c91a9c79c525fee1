#pragma once

namespace arithseq {

/// Code version string, used to invalidate cached experiment results.
const char* version();

}  // namespace arithseq
