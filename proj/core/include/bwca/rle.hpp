#ifndef BWCA_RLE_HPP
#define BWCA_RLE_HPP

#include "bwca/bytes.hpp"

namespace bwca {

// Pair-triggered run-length coding. A lone byte passes through unchanged; a
// run of k >= 2 equal bytes b is written as b,b,c with one count byte
// c = min(k - 2, 255), consuming 2 + c bytes of the run, and the remainder of
// a longer run starts over under the same rule.

Bytes rle_encode(ByteView input);

// Inverse scan: any adjacent equal pair must be followed by its count byte.
// Throws CorruptStreamError when the count byte is missing.
Bytes rle_decode(ByteView input);

} // namespace bwca

#endif
