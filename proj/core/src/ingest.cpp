#include "cpdist/ingest.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "cpdist/errors.hpp"

namespace cpdist {

namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_uint(std::string_view field, std::size_t line, const char* what) {
  field = trim(field);
  if (!field.empty() && field.front() == '-') {
    throw DomainError("line " + std::to_string(line) + ": " + what + " must be positive");
  }
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(field) + "'", line);
  }
  return v;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

std::map<std::string, std::uint64_t> word_frequencies(std::istream& text, const CorpusConfig& config) {
  std::map<std::string, std::uint64_t> freq;
  std::string token;
  char buf[1 << 16];
  auto flush = [&] {
    if (!token.empty()) {
      ++freq[token];
      token.clear();
    }
  };
  while (text.read(buf, sizeof buf) || text.gcount() > 0) {
    const std::streamsize got = text.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      char c = buf[i];
      if (is_alpha(c)) {
        if (config.lowercase && c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        token.push_back(c);
      } else {
        flush();
      }
    }
    if (got < static_cast<std::streamsize>(sizeof buf)) break;
  }
  flush();
  return freq;
}

FrequencyDataset word_counts(std::istream& text, const CorpusConfig& config) {
  FrequencyDataset data;
  for (const auto& [word, count] : word_frequencies(text, config)) {
    if (count >= config.min_count) data.add(count);
  }
  if (data.empty()) throw DomainError("corpus produced no tokens");
  return data;
}

FrequencyDataset word_counts_file(const std::filesystem::path& path, const CorpusConfig& config) {
  auto in = open_or_throw(path);
  return word_counts(in, config);
}

FrequencyDataset read_counts(std::istream& in) {
  FrequencyDataset data;
  std::string raw;
  std::size_t line = 0;
  bool seen_record = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    if (!seen_record && text == "value,count") continue;
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("expected 'value,count', got '" + std::string(text) + "'", line);
    }
    const std::uint64_t value = parse_uint(text.substr(0, comma), line, "value");
    const std::uint64_t count = parse_uint(text.substr(comma + 1), line, "count");
    if (value == 0) {
      throw DomainError("line " + std::to_string(line) + ": value 0 is outside the support {1, 2, ...}");
    }
    if (count == 0) throw DomainError("line " + std::to_string(line) + ": count must be positive");
    data.add(value, count);
    seen_record = true;
  }
  return data;
}

FrequencyDataset read_counts_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_counts(in);
}

void write_counts(std::ostream& out, const FrequencyDataset& data) {
  for (const auto& [value, count] : data.entries()) out << value << ',' << count << '\n';
}

}  // namespace cpdist
