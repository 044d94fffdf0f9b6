#include <random>
#include <sstream>

#include "cpdist/errors.hpp"
#include "cpdist/ingest.hpp"
#include "doctest.h"

using namespace cpdist;

namespace {

FrequencyDataset from_text(const std::string& text, CorpusConfig cfg = {}) {
  std::istringstream in(text);
  return word_counts(in, cfg);
}

FrequencyDataset from_csv(const std::string& text) {
  std::istringstream in(text);
  return read_counts(in);
}

}  // namespace

TEST_CASE("word counts become a frequency-of-frequencies dataset") {
  const auto d = from_text("the cat the");
  CHECK(d.entries() == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}});
  CHECK(from_text("a a a").entries() == std::map<std::uint64_t, std::uint64_t>{{3, 1}});
}

TEST_CASE("tokenisation splits on anything that is not an ASCII letter") {
  std::istringstream in("Call me Ishmael. Some years ago--never mind how long\xE2\x80\x94precisely; whale's 1851");
  const auto freq = word_frequencies(in);
  CHECK(freq.count("call") == 1);
  CHECK(freq.count("ishmael") == 1);
  CHECK(freq.count("ago") == 1);
  CHECK(freq.count("never") == 1);
  CHECK(freq.count("long") == 1);
  CHECK(freq.count("precisely") == 1);
  CHECK(freq.count("whale") == 1);
  CHECK(freq.count("s") == 1);
  CHECK(freq.size() == 13);
}

TEST_CASE("case folding and whitespace do not change the dataset") {
  const auto a = from_text("The whale  the\tWHALE\n\nthe sea");
  const auto b = from_text("the whale the whale the sea");
  CHECK(a == b);
  CorpusConfig keep_case;
  keep_case.lowercase = false;
  CHECK(from_text("The the", keep_case).entries() == std::map<std::uint64_t, std::uint64_t>{{1, 2}});
}

TEST_CASE("min_count drops rare words") {
  CorpusConfig cfg;
  cfg.min_count = 2;
  CHECK(from_text("a a b c c c", cfg).entries() == std::map<std::uint64_t, std::uint64_t>{{2, 1}, {3, 1}});
}

TEST_CASE("empty corpus is an error") {
  CHECK_THROWS_AS(from_text("  123 ... "), DomainError);
}

TEST_CASE("reading count files") {
  CHECK(from_csv("1,5\n2,3").entries() == std::map<std::uint64_t, std::uint64_t>{{1, 5}, {2, 3}});
  CHECK(from_csv("2,1\n2,2\n").entries() == std::map<std::uint64_t, std::uint64_t>{{2, 3}});
  CHECK(from_csv("value,count\r\n# comment\n\n 4 , 2 \r\n").entries() ==
        std::map<std::uint64_t, std::uint64_t>{{4, 2}});
  CHECK_THROWS_AS(from_csv("0,4"), DomainError);
  CHECK_THROWS_AS(from_csv("3,0"), DomainError);
  CHECK_THROWS_AS(from_csv("-2,4"), DomainError);
  try {
    from_csv("1,2\n2;3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(from_csv("1,2,3"), ParseError);
  CHECK_THROWS_AS(from_csv("x,2"), ParseError);
  CHECK_THROWS_AS(read_counts_file("/nonexistent/counts.csv"), ParseError);
}

TEST_CASE("write then read is the identity") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> value(1, 100000), count(1, 1000);
  for (int trial = 0; trial < 50; ++trial) {
    FrequencyDataset d;
    const int size = 1 + trial * 3;
    for (int i = 0; i < size; ++i) d.add(value(rng), count(rng));
    std::stringstream io;
    write_counts(io, d);
    CHECK(read_counts(io) == d);
  }
}
