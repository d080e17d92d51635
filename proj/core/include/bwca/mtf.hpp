#ifndef BWCA_MTF_HPP
#define BWCA_MTF_HPP

#include "bwca/bytes.hpp"

namespace bwca {

// Move-to-front coding over the full byte alphabet. The recency list starts
// as the identity permutation 0..255 on both sides; each coded symbol is the
// current list position of the input byte, which then moves to the front.

Bytes mtf_encode(ByteView input);
Bytes mtf_decode(ByteView input);

} // namespace bwca

#endif
