#ifndef BWCA_BWT_HPP
#define BWCA_BWT_HPP

#include <cstdint>

#include "bwca/bytes.hpp"

namespace bwca {

// Last column of the sorted rotation table of a block, plus the row where the
// original (offset 0) rotation ended up. Both are needed to invert.
struct BwtBlock {
    Bytes data;
    std::uint32_t primary_index = 0;

    bool operator==(const BwtBlock&) const = default;
};

// Sorts all cyclic rotations of the block (stable, unsigned byte order) and
// returns the last column. The stable sort puts the original rotation first
// within a group of equal rotations, which pins primary_index for periodic
// blocks like "aaaa". Throws InvalidInputError on an empty block.
BwtBlock bwt_forward(ByteView block);

// Recovers the block via LF mapping with stable ranking of equal symbols.
// Throws InvalidInputError when primary_index is out of range.
Bytes bwt_inverse(const BwtBlock& block);

} // namespace bwca

#endif
