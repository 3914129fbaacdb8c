#include "massbind/canonical.hpp"

#include "doctest.h"
#include "support/fixtures.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace massbind;

TEST_CASE("tokenize splits camelCase, underscores and dashes") {
  auto segs = tokenize("createdAt");
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].tokens == std::vector<std::string>{"created", "at"});

  segs = tokenize("book_title");
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].tokens == std::vector<std::string>{"book", "title"});

  segs = tokenize("x-api-key");
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].tokens == std::vector<std::string>{"x", "api", "key"});
}

TEST_CASE("tokenize preserves path segments") {
  auto segs = tokenize("user.accountId");
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].tokens == std::vector<std::string>{"user"});
  CHECK(segs[1].tokens == std::vector<std::string>{"account", "id"});

  segs = tokenize("tags[].name");
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].tokens == std::vector<std::string>{"tags"});
  CHECK(segs[0].array_rank == 1);
  CHECK(segs[1].tokens == std::vector<std::string>{"name"});
}

TEST_CASE("tokenize keeps digits attached") {
  auto segs = tokenize("address2");
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].tokens == std::vector<std::string>{"address2"});
}

TEST_CASE("porter_stem classic examples") {
  CHECK(porter_stem("caresses") == "caress");
  CHECK(porter_stem("ponies") == "poni");
  CHECK(porter_stem("a") == "a");
  CHECK(porter_stem("as") == "as");
  CHECK(porter_stem("address2") == "address2");
}

TEST_CASE("porter_stem passes non-stemmable tokens through") {
  CHECK(porter_stem("Status") == "Status");   // uppercase: caller lowers first
  CHECK(porter_stem("caf\xc3\xa9") == "caf\xc3\xa9"); // non-ASCII bypasses the cascade
}

TEST_CASE("canonical_key examples") {
  CHECK(canonical_key("assignee") == "assigne");
  CHECK(canonical_key("book_title") == "book_titl");
  CHECK(canonical_key("tags[].name") == "tag[].name");
  CHECK(canonical_key("user.accountId") == "user.account_id");
  CHECK(canonical_key("createdAt") == "creat_at");
}

TEST_CASE("canonical keys unify spellings") {
  CHECK(canonical_key("status") == canonical_key("Status"));
  CHECK(canonical_key("status") == canonical_key("STATUS"));
  CHECK(canonical_key("account_id") == canonical_key("accountId"));
  CHECK(canonical_key("accounted") != canonical_key("accountId"));
}

TEST_CASE("porter vocabulary oracle: full agreement") {
  std::istringstream voc(testsupport::read_fixture("porter/voc.txt"));
  std::istringstream expected(testsupport::read_fixture("porter/output.txt"));
  std::string word, stem;
  std::size_t checked = 0, mismatches = 0;
  while (std::getline(voc, word) && std::getline(expected, stem)) {
    if (word.empty()) continue;
    ++checked;
    if (porter_stem(word) != stem) {
      ++mismatches;
      if (mismatches <= 5)
        MESSAGE("mismatch: ", word, " -> ", porter_stem(word), " expected ", stem);
    }
  }
  CHECK(checked > 23000);
  CHECK(mismatches == 0);
}

TEST_CASE("porter_stem is idempotent over the vocabulary") {
  std::istringstream voc(testsupport::read_fixture("porter/voc.txt"));
  std::string word;
  while (std::getline(voc, word)) {
    if (word.empty()) continue;
    std::string once = porter_stem(word);
    REQUIRE(porter_stem(once) == once);
  }
}

TEST_CASE("canonical_key is idempotent and stays in its alphabet") {
  std::mt19937 rng(20240611);
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
                               "0123456789_-. []$@";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(1, 24);
  for (int i = 0; i < 2000; ++i) {
    std::string raw;
    int n = len(rng);
    for (int j = 0; j < n; ++j) raw += alphabet[pick(rng)];
    std::string key = canonical_key(raw);
    CAPTURE(raw);
    CHECK(canonical_key(key) == key);
    for (char c : key) {
      bool allowed = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
                     c == '.' || c == '[' || c == ']';
      CHECK(allowed);
    }
  }
}
