#pragma once

#include <functional>
#include <string>
#include <vector>

namespace postdoc {

struct Topic {
  std::string title;
  std::vector<std::string> bullets;
};

struct PosterImage {
  std::string element_id;
  std::string image_path;
  std::string caption;
};

struct PosterContent {
  std::string doc_id;
  std::string title;
  std::vector<Topic> topics;
  std::vector<PosterImage> images;
};

// The chat prompt, verbatim, with the summary text appended after "Text: ".
std::string build_prompt(const std::string& summary_text);

// Deterministic fallback: partitions the sentences into
// clamp(ceil(K/4), min(5, K), 8) contiguous near-equal groups, preserving
// order; topic title = first sentence of the group truncated to 60 chars,
// bullets = the group's sentences verbatim.
PosterContent paraphrase_offline(const std::vector<std::string>& sentences);

int offline_topic_count(int k_text);

struct ClientConfig {
  std::string endpoint = "https://api.openai.com/v1/chat/completions";
  std::string model = "gpt-3.5-turbo";
  double temperature = 0.0;
  int timeout_s = 30;
  std::string api_key;  // from POSTDOC_LLM_KEY; never a flag or file
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

using Transport = std::function<HttpResponse(const ClientConfig& cfg, const std::string& request_body)>;

Transport default_transport();

struct ParaphraseResult {
  PosterContent content;
  bool fallback_used = false;
  std::string warning;
};

// One chat-completion call; heading/bullet lines of the reply become topics.
// Transport or HTTP/auth failures raise remote_error; an unparseable reply
// falls back to paraphrase_offline with a warning.
ParaphraseResult paraphrase_remote(const std::vector<std::string>& sentences, const ClientConfig& cfg,
                                   const Transport& transport = default_transport());

// Parses "## Heading" / "**Heading**" / "1. Heading" topic lines and
// "-", "*", "•" bullet lines; returns false if no topic with a bullet emerges.
bool parse_llm_reply(const std::string& reply, std::vector<Topic>& out);

std::string join_sentences(const std::vector<std::string>& sentences);

}  // namespace postdoc
