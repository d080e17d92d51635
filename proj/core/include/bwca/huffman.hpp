#ifndef BWCA_HUFFMAN_HPP
#define BWCA_HUFFMAN_HPP

#include <array>
#include <cstdint>

#include "bwca/bytes.hpp"

namespace bwca {

// Entropy payload layout (byte-exact): 256 code-length bytes indexed by
// symbol value, an 8-byte little-endian decoded symbol count, then the
// bitstream packed MSB-first and zero-padded to a byte boundary.
inline constexpr std::size_t kEntropyHeaderSize = 256 + 8;

// Longest representable code. A one-byte length field allows 255, but a code
// over 64 bits would need total symbol counts beyond any input this library
// can see, so codes are kept in a uint64 and this bound is enforced.
inline constexpr unsigned kMaxCodeLength = 64;

// Canonical prefix code. Lengths fully determine the codes: symbols are
// ordered by (length ascending, symbol value ascending) and assigned
// consecutive code values, shifting left when the length grows.
class HuffmanCodeTable {
public:
    // Builds the canonical code set from per-symbol lengths (0 = absent).
    // Throws CorruptStreamError when the lengths oversubscribe the code space
    // (Kraft sum > 1) or exceed kMaxCodeLength.
    static HuffmanCodeTable from_lengths(const std::array<std::uint8_t, 256>& lengths);

    const std::array<std::uint8_t, 256>& lengths() const { return lengths_; }
    std::uint8_t length(unsigned symbol) const { return lengths_[symbol]; }
    std::uint64_t code(unsigned symbol) const { return codes_[symbol]; }
    unsigned max_length() const { return max_length_; }
    std::size_t symbol_count() const { return sorted_symbols_.size(); }

    // Canonical decode state: given a code value of a given length, returns
    // the symbol or -1 when no code of that length matches.
    int symbol_at(unsigned length, std::uint64_t code) const;

private:
    std::array<std::uint8_t, 256> lengths_{};
    std::array<std::uint64_t, 256> codes_{};
    // Per-length canonical bookkeeping used by the decoder.
    std::array<std::uint64_t, kMaxCodeLength + 1> first_code_{};
    std::array<std::uint32_t, kMaxCodeLength + 1> first_index_{};
    std::array<std::uint32_t, kMaxCodeLength + 1> count_{};
    std::vector<std::uint8_t> sorted_symbols_;
    unsigned max_length_ = 0;
};

// Optimal prefix-code lengths for the given frequencies: repeatedly merge the
// two lowest-weight subtrees, breaking ties by the lowest symbol value
// contained in a subtree. A single present symbol gets length 1. Throws
// InvalidInputError when every count is zero.
HuffmanCodeTable huffman_build(const std::array<std::uint64_t, 256>& freqs);

// Full entropy payload for the input (header + bitstream as above). The
// empty input yields an all-zero header and no bits.
Bytes huffman_encode(ByteView input);

// Decodes exactly the advertised number of symbols. Throws CorruptStreamError
// on a truncated header, a Kraft violation, bit exhaustion, or unused bytes
// beyond the final padding.
Bytes huffman_decode(ByteView payload);

} // namespace bwca

#endif
