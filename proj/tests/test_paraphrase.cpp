#include "doctest.h"
#include "json.hpp"
#include "postdoc/errors.hpp"
#include "postdoc/paraphrase.hpp"

using namespace postdoc;
using nlohmann::json;

namespace {

std::vector<std::string> numbered_sentences(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("Sentence number " + std::to_string(i) + ".");
  return out;
}

ClientConfig test_config() {
  ClientConfig cfg;
  cfg.api_key = "test-key";
  return cfg;
}

Transport stub_reply(const std::string& content, int status = 200, int* calls = nullptr) {
  return [content, status, calls](const ClientConfig&, const std::string&) {
    if (calls) ++*calls;
    const json body{{"choices", {{{"message", {{"role", "assistant"}, {"content", content}}}}}}};
    return HttpResponse{status, body.dump()};
  };
}

}  // namespace

TEST_SUITE("paraphrase") {
  TEST_CASE("prompt is the template plus the input, nothing else") {
    const std::string prompt = build_prompt("X.");
    CHECK(prompt.find("5 to 8 topics") != std::string::npos);
    CHECK(prompt.find("atleast 3 rephrased sentences") != std::string::npos);
    CHECK(prompt.substr(prompt.size() - 8) == "Text: X.");
    // nothing beyond template + input: the input appears exactly at the tail
    const std::string longer = build_prompt("Some body of text.");
    CHECK(longer.size() - std::string("Some body of text.").size() ==
          prompt.size() - std::string("X.").size());
  }

  TEST_CASE("empty prompt input is rejected") {
    CHECK_THROWS_AS((void)build_prompt(""), validation_error);
  }

  TEST_CASE("offline topic count follows the clamp formula") {
    CHECK(offline_topic_count(12) == 5);   // ceil(12/4)=3 clamped up to min(5,12)
    CHECK(offline_topic_count(3) == 3);    // lower clamp min(5,3)
    CHECK(offline_topic_count(40) == 8);   // ceil(10) clamped down to 8
    CHECK(offline_topic_count(1) == 1);
    CHECK(offline_topic_count(24) == 6);   // ceil(24/4)=6, inside the band
    CHECK(offline_topic_count(32) == 8);
  }

  TEST_CASE("offline grouping: 12 sentences make 5 ordered topics") {
    const auto sentences = numbered_sentences(12);
    const PosterContent content = paraphrase_offline(sentences);
    CHECK(content.topics.size() == 5);
    std::vector<std::string> flattened;
    for (const auto& t : content.topics) {
      CHECK(!t.bullets.empty());
      CHECK(t.title == t.bullets.front().substr(0, t.title.size()));
      for (const auto& b : t.bullets) flattened.push_back(b);
    }
    CHECK(flattened == sentences);  // order preserved exactly
    // near-equal contiguous groups: 12 over 5 -> sizes 3,3,2,2,2
    CHECK(content.topics[0].bullets.size() == 3);
    CHECK(content.topics[1].bullets.size() == 3);
    CHECK(content.topics[2].bullets.size() == 2);
  }

  TEST_CASE("offline grouping: 3 sentences make 3 singleton topics") {
    const PosterContent content = paraphrase_offline(numbered_sentences(3));
    CHECK(content.topics.size() == 3);
    for (const auto& t : content.topics) CHECK(t.bullets.size() == 1);
  }

  TEST_CASE("offline grouping: 40 sentences hit the 8-topic cap") {
    const PosterContent content = paraphrase_offline(numbered_sentences(40));
    CHECK(content.topics.size() == 8);
  }

  TEST_CASE("offline titles are truncated to 60 characters") {
    const std::string y80(80, 'y');
    const PosterContent content = paraphrase_offline({y80});
    CHECK(content.topics.size() == 1);
    CHECK(content.topics[0].title.size() == 60);
    CHECK(content.topics[0].bullets[0] == y80);
  }

  TEST_CASE("offline truncation never splits a UTF-8 sequence") {
    // "ab" + 20 three-byte chars = 62 bytes; byte 60 falls inside the final
    // char, so the cut must back off to the boundary at byte 59
    std::string s = "ab";
    for (int i = 0; i < 20; ++i) s += "\xE2\x82\xAC";
    const PosterContent content = paraphrase_offline({s});
    const std::string& t = content.topics[0].title;
    CHECK(t.size() == 59);
    CHECK(t == s.substr(0, 59));
  }

  TEST_CASE("offline mode is pure") {
    const auto sentences = numbered_sentences(9);
    const PosterContent a = paraphrase_offline(sentences);
    const PosterContent b = paraphrase_offline(sentences);
    REQUIRE(a.topics.size() == b.topics.size());
    for (size_t i = 0; i < a.topics.size(); ++i) {
      CHECK(a.topics[i].title == b.topics[i].title);
      CHECK(a.topics[i].bullets == b.topics[i].bullets);
    }
  }

  TEST_CASE("offline needs at least one sentence") {
    CHECK_THROWS_AS((void)paraphrase_offline({}), validation_error);
  }

  TEST_CASE("reply parser handles the heading and bullet grammar") {
    std::vector<Topic> topics;
    REQUIRE(parse_llm_reply("## T1\n- a\n- b\n- c", topics));
    REQUIRE(topics.size() == 1);
    CHECK(topics[0].title == "T1");
    CHECK(topics[0].bullets == std::vector<std::string>{"a", "b", "c"});

    topics.clear();
    REQUIRE(parse_llm_reply("**Bold Topic**\n* one\n• two\n2. Second\n- three", topics));
    REQUIRE(topics.size() == 2);
    CHECK(topics[0].title == "Bold Topic");
    CHECK(topics[0].bullets == std::vector<std::string>{"one", "two"});
    CHECK(topics[1].title == "Second");
    CHECK(topics[1].bullets == std::vector<std::string>{"three"});
  }

  TEST_CASE("reply parser drops bulletless topics and rejects empty replies") {
    std::vector<Topic> topics;
    CHECK(!parse_llm_reply("## Lonely heading\n## Another", topics));
    CHECK(!parse_llm_reply("no structure at all", topics));
    CHECK(!parse_llm_reply("", topics));
  }

  TEST_CASE("remote mode requires a credential before any network activity") {
    int calls = 0;
    ClientConfig cfg;  // api_key empty
    const Transport transport = stub_reply("## T\n- b", 200, &calls);
    CHECK_THROWS_AS((void)paraphrase_remote(numbered_sentences(3), cfg, transport),
                    validation_error);
    CHECK(calls == 0);
  }

  TEST_CASE("remote mode parses a well-formed reply") {
    const ParaphraseResult res = paraphrase_remote(
        numbered_sentences(3), test_config(), stub_reply("## Intro\n- first\n- second\n- third"));
    CHECK(!res.fallback_used);
    REQUIRE(res.content.topics.size() == 1);
    CHECK(res.content.topics[0].bullets.size() == 3);
  }

  TEST_CASE("remote mode falls back on an unparseable reply body") {
    const ParaphraseResult res =
        paraphrase_remote(numbered_sentences(6), test_config(),
                          [](const ClientConfig&, const std::string&) {
                            return HttpResponse{200, "not json at all {"};
                          });
    CHECK(res.fallback_used);
    CHECK(!res.warning.empty());
    CHECK(res.content.topics.size() == offline_topic_count(6));
  }

  TEST_CASE("remote mode falls back when the reply has no topic structure") {
    const ParaphraseResult res = paraphrase_remote(numbered_sentences(6), test_config(),
                                                   stub_reply("plain prose, no headings"));
    CHECK(res.fallback_used);
    CHECK(!res.warning.empty());
  }

  TEST_CASE("HTTP failures raise remote errors") {
    CHECK_THROWS_AS(
        (void)paraphrase_remote(numbered_sentences(3), test_config(), stub_reply("x", 401)),
        remote_error);
    CHECK_THROWS_AS(
        (void)paraphrase_remote(numbered_sentences(3), test_config(), stub_reply("x", 500)),
        remote_error);
  }

  TEST_CASE("request body carries the prompt, model, and temperature") {
    std::string seen;
    const Transport capture = [&seen](const ClientConfig&, const std::string& body) {
      seen = body;
      return HttpResponse{200, ""};
    };
    const ParaphraseResult res = paraphrase_remote(numbered_sentences(2), test_config(), capture);
    CHECK(res.fallback_used);  // empty body is unparseable, but the request went out
    const json req = json::parse(seen);
    CHECK(req["model"] == "gpt-3.5-turbo");
    CHECK(req["temperature"] == 0.0);
    const std::string prompt = req["messages"][0]["content"];
    CHECK(prompt.find("5 to 8 topics") != std::string::npos);
    CHECK(prompt.find("Sentence number 0.") != std::string::npos);
  }

  TEST_CASE("sentence joining inserts single spaces") {
    CHECK(join_sentences({"A.", "B.", "C."}) == "A. B. C.");
    CHECK(join_sentences({"solo"}) == "solo");
  }
}
