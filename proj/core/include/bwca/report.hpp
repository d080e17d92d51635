#ifndef BWCA_REPORT_HPP
#define BWCA_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "bwca/bytes.hpp"
#include "bwca/pipeline.hpp"

namespace bwca {

// (original - compressed) / original * 100, as exact hundredths of a percent
// rounded half away from zero. Throws InvalidInputError when original == 0.
std::int64_t compression_ratio_centi(std::uint64_t original, std::uint64_t compressed);

// Same ratio as a double with two-decimal resolution.
double compression_ratio(std::uint64_t original, std::uint64_t compressed);

// "67.13" style rendering of a centi-percent value.
std::string format_centi(std::int64_t centi);

struct CorpusEntry {
    std::string name;
    std::uint64_t original_size = 0;
    std::vector<std::uint64_t> compressed_sizes; // aligned with method_names
};

// Measured sizes for a corpus run. Ratios and averages are always recomputed
// from the stored sizes.
struct CorpusRun {
    std::vector<std::string> method_names;
    std::vector<CorpusEntry> entries;

    std::int64_t ratio_centi(std::size_t entry, std::size_t method) const;
    double average_original() const;
    double average_compressed(std::size_t method) const;
    double average_ratio(std::size_t method) const;
};

// Compresses every (buffer, spec) pair, verifies that the serialized
// container decompresses back to the input, and records the sizes. Rows keep
// input order. Throws VerificationError naming the input and method on any
// roundtrip mismatch and InvalidInputError on an empty input.
CorpusRun run_corpus_buffers(const std::vector<std::pair<std::string, Bytes>>& inputs,
                             const std::vector<PipelineSpec>& specs,
                             const Dictionary* dict = nullptr);

// File-reading wrapper around run_corpus_buffers.
CorpusRun run_corpus(const std::vector<std::filesystem::path>& files,
                     const std::vector<PipelineSpec>& specs,
                     const Dictionary* dict = nullptr);

// The summary table plus the four plot-ready data series: average file sizes,
// per-file compressed sizes, per-file compression ratios, and average
// compression ratio per method. All comma-separated with LF endings, sizes as
// integers, ratios with exactly two decimals, averages appended as an "Avg"
// row (sizes averaged to one decimal).
struct ReportBundle {
    std::string summary;
    std::string average_sizes;
    std::string compressed_sizes;
    std::string ratios;
    std::string average_ratios;
};

ReportBundle render_report(const CorpusRun& run);

} // namespace bwca

#endif
