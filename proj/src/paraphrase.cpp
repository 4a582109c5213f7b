#include "postdoc/paraphrase.hpp"

#ifdef POSTDOC_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <algorithm>
#include <cctype>

#include "httplib.h"
#include "json.hpp"
#include "postdoc/errors.hpp"

namespace postdoc {

using nlohmann::json;

static const char* kPromptTemplate =
    "Group and rephrase the content of the following text into 5 to 8 topics without altering the "
    "order such that for each topic, there is a title and atleast 3 rephrased sentences as bullet "
    "points so that it will look good in a poster. Do not add any new content.\nText: ";

std::string build_prompt(const std::string& summary_text) {
  if (summary_text.empty()) throw validation_error("summary text is empty");
  return kPromptTemplate + summary_text;
}

int offline_topic_count(int k_text) {
  if (k_text < 1) throw validation_error("at least one sentence required");
  int n = (k_text + 3) / 4;
  n = std::max(n, std::min(5, k_text));
  n = std::min(n, 8);
  return n;
}

static std::string truncate_utf8(const std::string& s, size_t max_bytes) {
  if (s.size() <= max_bytes) return s;
  size_t pos = max_bytes;
  while (pos > 0 && ((unsigned char)s[pos] & 0xC0) == 0x80) --pos;
  return s.substr(0, pos);
}

PosterContent paraphrase_offline(const std::vector<std::string>& sentences) {
  const int k = (int)sentences.size();
  const int n = offline_topic_count(k);
  PosterContent content;
  const int base = k / n, rem = k % n;
  int pos = 0;
  for (int i = 0; i < n; ++i) {
    const int size = base + (i < rem ? 1 : 0);
    Topic topic;
    topic.title = truncate_utf8(sentences[pos], 60);
    for (int j = 0; j < size; ++j) topic.bullets.push_back(sentences[pos + j]);
    content.topics.push_back(std::move(topic));
    pos += size;
  }
  return content;
}

std::string join_sentences(const std::vector<std::string>& sentences) {
  std::string out;
  for (size_t i = 0; i < sentences.size(); ++i) {
    if (i) out += ' ';
    out += sentences[i];
  }
  return out;
}

static std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

static bool parse_heading(const std::string& line, std::string& title) {
  if (line.rfind("##", 0) == 0) {
    size_t p = line.find_first_not_of("# ", 0);
    title = p == std::string::npos ? "" : trim(line.substr(p));
    return true;
  }
  if (line.rfind("**", 0) == 0) {
    std::string t = line.substr(2);
    if (t.size() >= 2 && t.substr(t.size() - 2) == "**") t = t.substr(0, t.size() - 2);
    title = trim(t);
    return true;
  }
  size_t i = 0;
  while (i < line.size() && std::isdigit((unsigned char)line[i])) ++i;
  if (i > 0 && i < line.size() && line[i] == '.') {
    title = trim(line.substr(i + 1));
    return true;
  }
  return false;
}

static bool parse_bullet(const std::string& line, std::string& text) {
  size_t skip = 0;
  if (line.rfind("- ", 0) == 0 || line.rfind("* ", 0) == 0)
    skip = 2;
  else if (line == "-" || line == "*")
    skip = 1;
  else if (line.rfind("\xE2\x80\xA2", 0) == 0)  // "•"
    skip = 3;
  else
    return false;
  text = trim(line.substr(skip));
  return true;
}

bool parse_llm_reply(const std::string& reply, std::vector<Topic>& out) {
  out.clear();
  std::vector<Topic> topics;
  std::string line;
  size_t start = 0;
  while (start <= reply.size()) {
    size_t end = reply.find('\n', start);
    if (end == std::string::npos) end = reply.size();
    line = trim(reply.substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;
    std::string payload;
    if (parse_heading(line, payload)) {
      Topic t;
      t.title = payload;
      topics.push_back(std::move(t));
    } else if (parse_bullet(line, payload)) {
      if (!payload.empty() && !topics.empty()) topics.back().bullets.push_back(payload);
    }
  }
  for (auto& t : topics)
    if (!t.bullets.empty()) {
      if (t.title.empty()) t.title = t.bullets.front();
      out.push_back(std::move(t));
    }
  return !out.empty();
}

Transport default_transport() {
  return [](const ClientConfig& cfg, const std::string& request_body) -> HttpResponse {
    size_t scheme_end = cfg.endpoint.find("://");
    if (scheme_end == std::string::npos)
      throw validation_error("invalid endpoint URL: " + cfg.endpoint);
    size_t path_start = cfg.endpoint.find('/', scheme_end + 3);
    const std::string origin =
        path_start == std::string::npos ? cfg.endpoint : cfg.endpoint.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : cfg.endpoint.substr(path_start);

    httplib::Client client(origin);
    client.set_connection_timeout(cfg.timeout_s);
    client.set_read_timeout(cfg.timeout_s);
    httplib::Headers headers{{"Authorization", "Bearer " + cfg.api_key}};
    auto res = client.Post(path, headers, request_body, "application/json");
    if (!res)
      throw remote_error("request to " + origin + " failed: " + httplib::to_string(res.error()));
    return HttpResponse{res->status, res->body};
  };
}

ParaphraseResult paraphrase_remote(const std::vector<std::string>& sentences, const ClientConfig& cfg,
                                   const Transport& transport) {
  if (cfg.api_key.empty())
    throw validation_error("remote paraphrase requires the POSTDOC_LLM_KEY environment variable");
  const std::string prompt = build_prompt(join_sentences(sentences));

  json req;
  req["model"] = cfg.model;
  req["temperature"] = cfg.temperature;
  req["messages"] = json::array({json{{"role", "user"}, {"content", prompt}}});

  HttpResponse resp = transport(cfg, req.dump());
  if (resp.status < 200 || resp.status >= 300)
    throw remote_error("remote service returned HTTP " + std::to_string(resp.status));

  ParaphraseResult result;
  std::string reply;
  try {
    json j = json::parse(resp.body);
    reply = j.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception&) {
    result.content = paraphrase_offline(sentences);
    result.fallback_used = true;
    result.warning = "remote reply was not a chat completion; used offline paraphrase";
    return result;
  }
  std::vector<Topic> topics;
  if (!parse_llm_reply(reply, topics)) {
    result.content = paraphrase_offline(sentences);
    result.fallback_used = true;
    result.warning = "remote reply had no recognizable topics; used offline paraphrase";
    return result;
  }
  result.content.topics = std::move(topics);
  return result;
}

}  // namespace postdoc
