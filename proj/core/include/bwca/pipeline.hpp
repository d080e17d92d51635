#ifndef BWCA_PIPELINE_HPP
#define BWCA_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bwca/bytes.hpp"
#include "bwca/dictionary.hpp"

namespace bwca {

inline constexpr std::uint16_t kDefaultBlockSize = 100;

// The four pipelines. The numeric values are the on-disk pipeline ids.
//   Bwca         = BWT + MTF + RLE + Huffman
//   Proposed     = BWT + RLE + MTF + RLE + Huffman
//   DictBwca     = dictionary stage + Bwca
//   DictProposed = dictionary stage + Proposed
enum class PipelineId : std::uint8_t {
    Bwca = 1,
    Proposed = 2,
    DictBwca = 3,
    DictProposed = 4,
};

bool pipeline_uses_dictionary(PipelineId id);
// Canonical method names: "bwca", "proposed", "dict-bwca", "dict-proposed".
std::string_view method_name(PipelineId id);
// Throws ConfigError on an unknown name.
PipelineId parse_method(std::string_view name);

struct PipelineSpec {
    PipelineId id = PipelineId::Bwca;
    std::uint16_t block_size = kDefaultBlockSize;

    bool uses_dictionary() const { return pipeline_uses_dictionary(id); }
};

// Per-block frame: where the original rotation sits in the sorted table and
// how many bytes this block contributed to the concatenated entropy input.
struct BlockRecord {
    std::uint16_t primary_index = 0;
    std::uint32_t payload_length = 0;

    bool operator==(const BlockRecord&) const = default;
};

// In-memory image of the compressed file. `dict_fingerprint` is meaningful
// only for dictionary pipelines. An empty input has zero blocks and no
// entropy payload at all.
struct Container {
    PipelineId pipeline = PipelineId::Bwca;
    std::uint16_t block_size = kDefaultBlockSize;
    std::uint64_t dict_fingerprint = 0;
    std::uint64_t transformed_length = 0;
    std::vector<BlockRecord> blocks;
    Bytes entropy_payload;

    bool operator==(const Container&) const = default;
};

// Ordered (stage name, stage output) pairs recorded while compressing: the
// whole-file dictionary stage, the first block's BWT/MTF/RLE outputs, and the
// final entropy payload. Stage names match the intermediate-file convention:
// DICTIONARY, BWT, MTF, RLE, HUFFMAN.
using StageTrace = std::vector<std::pair<std::string, Bytes>>;

// Runs the pipeline: the dictionary stage (if any) over the whole input, the
// BWT-rooted stage chain per block of `spec.block_size` bytes, one Huffman
// pass over the concatenated block payloads. `dict` must be present exactly
// when the pipeline has a dictionary stage (ConfigError otherwise).
// `trace` and `unknown_words`, when non-null, receive the stage dump and the
// words the dictionary did not know.
Container compress(ByteView input, const PipelineSpec& spec,
                   const Dictionary* dict = nullptr,
                   StageTrace* trace = nullptr,
                   UnknownWordLog* unknown_words = nullptr);

// Exact inverse of compress. Throws ConfigError when the dictionary presence
// does not match the pipeline, DictionaryMismatchError when the fingerprint
// differs, and CorruptStreamError when any stage fails to invert.
Bytes decompress(const Container& container, const Dictionary* dict = nullptr);

// Byte-exact layout, all integers little-endian: magic "BWCA", version 0x01,
// pipeline id (1 byte), block size (2), dictionary fingerprint (8, present
// iff the pipeline has a dictionary stage), transformed-stream length (8),
// block count (4), then per block primary index (2) + payload length (4),
// then the entropy payload (absent when the block count is zero).
Bytes serialize(const Container& container);
// Throws FormatError on bad magic/version, an unknown pipeline id,
// truncation, inconsistent counts, or trailing bytes.
Container parse_container(ByteView data);

} // namespace bwca

#endif
