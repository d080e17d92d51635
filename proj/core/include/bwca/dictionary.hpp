#ifndef BWCA_DICTIONARY_HPP
#define BWCA_DICTIONARY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bwca/bytes.hpp"

namespace bwca {

inline constexpr std::size_t kDefaultDictionaryCapacity = 5000;

inline bool is_ascii_letter(std::uint8_t c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

enum class TokenKind { Word, Separator };

// A maximal run of ASCII letters (Word) or of anything else (Separator).
// Concatenating a token stream reproduces the source byte for byte.
struct Token {
    TokenKind kind;
    std::string text;

    bool operator==(const Token&) const = default;
};

std::vector<Token> tokenize(ByteView text);

// Codeword for the i-th coded entry: bijective enumeration over the 52-letter
// digit alphabet a..z,A..Z, shortest codewords first, most significant digit
// first. Index 0 -> "a", 51 -> "Z", 52 -> "aa", 2755 -> "ZZ", 2756 -> "aaa".
std::string codeword_for_index(std::uint64_t index);

struct DictEntry {
    std::string word;
    std::uint64_t frequency = 0;

    bool operator==(const DictEntry&) const = default;
};

// Distinct words the dictionary did not know during encoding, with their
// occurrence counts, in first-seen order.
class UnknownWordLog {
public:
    void note(std::string_view word);

    const std::vector<std::pair<std::string, std::uint64_t>>& entries() const {
        return entries_;
    }
    bool empty() const { return entries_.empty(); }

    // One "<word>\t<count>" line per entry, LF endings.
    std::string serialize() const;
    static UnknownWordLog parse(std::string_view text);

private:
    std::vector<std::pair<std::string, std::uint64_t>> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Capacity-bounded word list in canonical order: length descending, then
// frequency descending, then lexicographic. Entries of length >= 4 (always a
// prefix of the list) carry codewords assigned by enumeration index; shorter
// entries are kept for frequency bookkeeping but are never coded.
class Dictionary {
public:
    Dictionary() = default;

    const std::vector<DictEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t capacity() const { return capacity_; }
    std::uint64_t fingerprint() const { return fingerprint_; }

    bool contains(std::string_view word) const;
    // Null when the word is absent or too short to be coded.
    const std::string* codeword_for(std::string_view word) const;
    const std::string* word_for_codeword(std::string_view codeword) const;

    // Canonical text form: "BWCADICT 1 <entry-count>" then one
    // "<word>\t<frequency>" line per entry, LF endings, ASCII only.
    std::string serialize() const;

    bool operator==(const Dictionary& other) const {
        return entries_ == other.entries_;
    }

private:
    friend Dictionary build_dictionary(const std::vector<ByteView>&, std::size_t);
    friend Dictionary update_dictionary(const Dictionary&, const UnknownWordLog&, std::size_t);
    friend Dictionary load_dictionary(std::string_view);

    static Dictionary from_counts(std::vector<DictEntry> counts, std::size_t capacity);
    void finalize(); // sort canonically, assign codewords, fingerprint

    std::vector<DictEntry> entries_;
    std::vector<std::string> codewords_; // aligned with the coded prefix of entries_
    std::unordered_map<std::string, std::size_t> word_index_;
    std::unordered_map<std::string, std::size_t> codeword_index_;
    std::uint64_t fingerprint_ = 0;
    std::size_t capacity_ = kDefaultDictionaryCapacity;
};

// Counts words across the corpora and keeps the `capacity` most frequent
// (ties broken lexicographically), ordered canonically.
Dictionary build_dictionary(const std::vector<ByteView>& corpora,
                            std::size_t capacity = kDefaultDictionaryCapacity);

// Merges logged word counts into the dictionary's counts and rebuilds under
// the given capacity (0 = keep the dictionary's own capacity).
Dictionary update_dictionary(const Dictionary& dict, const UnknownWordLog& log,
                             std::size_t capacity = 0);

std::string save_dictionary(const Dictionary& dict);
// Throws FormatError on a malformed header or line, a non-letter word, a
// duplicate word, an out-of-order entry, or an entry-count mismatch.
Dictionary load_dictionary(std::string_view text);

struct DictEncodeResult {
    Bytes transformed;
    UnknownWordLog unknown_words;
};

// Replaces each coded word with its codeword; every other letter run is
// emitted as '*' + run, and literal '*' or '\' bytes inside separators are
// '\'-escaped. Words absent from the dictionary are logged.
DictEncodeResult dict_encode(ByteView text, const Dictionary& dict);

// Exact inverse of dict_encode under the same dictionary. Throws
// CorruptStreamError on an unescaped letter run with no codeword mapping or
// on a dangling escape byte.
Bytes dict_decode(ByteView transformed, const Dictionary& dict);

std::uint64_t fnv1a64(ByteView data);

} // namespace bwca

#endif
