#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

#include "cpdist/estimate.hpp"

namespace cpdist {

struct CorpusConfig {
  bool lowercase = true;
  /// Words seen fewer times than this are dropped before building the dataset.
  std::uint64_t min_count = 1;
};

/// Occurrences per distinct token. Tokens are maximal runs of ASCII letters;
/// every other byte (digits, punctuation, UTF-8 multibyte sequences) separates.
std::map<std::string, std::uint64_t> word_frequencies(std::istream& text, const CorpusConfig& config = {});

/// Dataset whose observations are the per-word occurrence counts:
/// value k maps to the number of distinct words seen exactly k times.
/// Throws DomainError when no token survives.
FrequencyDataset word_counts(std::istream& text, const CorpusConfig& config = {});
FrequencyDataset word_counts_file(const std::filesystem::path& path, const CorpusConfig& config = {});

/// Reads "value,count" records. Blank lines, '#' comments and a leading
/// "value,count" header are ignored; duplicate values are merged.
/// Throws ParseError (with line number) or DomainError.
FrequencyDataset read_counts(std::istream& in);
FrequencyDataset read_counts_file(const std::filesystem::path& path);

/// Writes one "value,count" line per distinct value, ascending.
void write_counts(std::ostream& out, const FrequencyDataset& data);

}  // namespace cpdist
