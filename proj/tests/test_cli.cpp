#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "testutil.hpp"

using nlohmann::json;
using testutil::run_cli;
using testutil::TempDir;

namespace {

json element_json(const std::string& id, int ordinal, const std::string& modality,
                  const std::vector<double>& emb, const std::string& text) {
  json j{{"id", id}, {"ordinal", ordinal}, {"modality", modality}, {"embedding", emb},
         {"text", text}};
  if (modality == "image") j["image_path"] = id + ".png";
  return j;
}

// A raw two-document corpus; embeddings include negatives so ingest has to
// normalize. Every element is in the ground truth of its document.
std::string raw_corpus() {
  json d1{{"doc_id", "alpha"},
          {"title", "Alpha Document"},
          {"elements",
           {element_json("a1", 0, "text", {0.9, -0.1, 0.3}, "The quick brown fox jumps."),
            element_json("a2", 1, "text", {-0.2, 0.8, 0.1}, "A lazy dog sleeps in the sun."),
            element_json("a3", 2, "image", {0.1, 0.2, 0.9}, "A fox mid-jump."),
            element_json("a4", 3, "text", {0.4, 0.4, -0.3}, "Foxes are quick and clever."),
            element_json("a5", 4, "text", {0.2, -0.5, 0.6}, "Dogs are loyal companions.")}},
          {"ground_truth", {{"selected_ids", {"a1", "a2", "a3", "a4", "a5"}}}}};
  json d2{{"doc_id", "beta"},
          {"title", "Beta Document"},
          {"elements",
           {element_json("b1", 0, "text", {0.5, 0.5, -0.2}, "Rivers carve deep canyons."),
            element_json("b2", 1, "image", {-0.3, 0.9, 0.2}, "A canyon at dawn."),
            element_json("b3", 2, "text", {0.7, 0.1, 0.4}, "Erosion works over millennia.")}},
          {"ground_truth", {{"selected_ids", {"b1", "b2", "b3"}}}}};
  return d1.dump() + "\n" + d2.dump() + "\n";
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("help exits zero, bad flags exit two") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("summarize --help").exit_code == 0);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("summarize --bogus-flag x").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required
  }

  TEST_CASE("missing files exit three with a one-line diagnostic") {
    const auto res = run_cli("summarize --doc /nonexistent.jsonl --out /tmp/x.jsonl");
    CHECK(res.exit_code == 3);
    CHECK(res.output.rfind("error: ", 0) == 0);
    CHECK(res.output.find('\n') == res.output.size() - 1);
  }

  TEST_CASE("malformed corpora exit two and write no output") {
    TempDir tmp;
    testutil::write_file(tmp.file("bad.jsonl"), "{broken\n");
    const auto res =
        run_cli("summarize --doc " + tmp.file("bad.jsonl") + " --out " + tmp.file("out.jsonl"));
    CHECK(res.exit_code == 2);
    CHECK(res.output.rfind("error: ", 0) == 0);
    CHECK(!std::filesystem::exists(tmp.file("out.jsonl")));
  }

  TEST_CASE("remote paraphrase without a credential exits two before any network use") {
    TempDir tmp;
    testutil::write_file(tmp.file("c.jsonl"), raw_corpus());
    REQUIRE(run_cli("ingest --input " + tmp.file("c.jsonl") + " --out " + tmp.file("n.jsonl"))
                .exit_code == 0);
    REQUIRE(run_cli("summarize --doc " + tmp.file("n.jsonl") + " --out " + tmp.file("s.jsonl"))
                .exit_code == 0);
    unsetenv("POSTDOC_LLM_KEY");
    const auto res = run_cli("paraphrase --summary " + tmp.file("s.jsonl") + " --remote --out " +
                             tmp.file("content.json"));
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("POSTDOC_LLM_KEY") != std::string::npos);
  }

  TEST_CASE("full pipeline: ingest through render") {
    TempDir tmp;
    testutil::write_file(tmp.file("raw.jsonl"), raw_corpus());

    auto ingest =
        run_cli("ingest --input " + tmp.file("raw.jsonl") + " --out " + tmp.file("corpus.jsonl"));
    REQUIRE(ingest.exit_code == 0);
    const json stats = json::parse(ingest.output);
    CHECK(stats["documents"] == 2);
    CHECK(stats["elements"] == 8);
    CHECK(stats["d"] == 3);

    auto summarize = run_cli("summarize --doc " + tmp.file("corpus.jsonl") + " --out " +
                             tmp.file("summaries.jsonl") + " --jobs 2");
    REQUIRE(summarize.exit_code == 0);

    auto evaluate = run_cli("evaluate --pred " + tmp.file("summaries.jsonl") + " --gold " +
                            tmp.file("corpus.jsonl") + " --source " + tmp.file("corpus.jsonl") +
                            " --out " + tmp.file("report.json"));
    REQUIRE(evaluate.exit_code == 0);
    const json report = json::parse(testutil::read_file(tmp.file("report.json")));
    CHECK(report["n_documents"] == 2);
    // the default budget selects everything, so predictions equal gold
    CHECK(report["aggregate"]["rouge1_f1"]["mean"] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report["aggregate"]["rouge2_f1"]["mean"] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report["aggregate"]["image_precision"]["mean"] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report["aggregate"]["coverage"]["mean"].get<double>() > 0.0);
    CHECK(report["aggregate"]["diversity"]["mean"].get<double>() >= 0.0);
    CHECK(report["per_document"].size() == 2);

    REQUIRE(run_cli("paraphrase --summary " + tmp.file("summaries.jsonl") + " --offline --out " +
                    tmp.file("content.json"))
                .exit_code == 0);
    const json content = json::parse(testutil::read_file(tmp.file("content.json")));
    CHECK(content["doc_id"] == "alpha");
    CHECK(content["title"] == "Alpha Document");
    CHECK(content["topics"].size() >= 1);

    REQUIRE(run_cli("layout --content " + tmp.file("content.json") + " --out " +
                    tmp.file("layout.json"))
                .exit_code == 0);

    auto score = run_cli("score-layout --layout " + tmp.file("layout.json"));
    REQUIRE(score.exit_code == 0);
    const json ngo = json::parse(score.output);
    CHECK(ngo["overlap"] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ngo["overall"].get<double>() > 0.0);

    auto palette = run_cli("palette --out " + tmp.file("roles.json"));
    REQUIRE(palette.exit_code == 0);

    auto render = run_cli("render --layout " + tmp.file("layout.json") + " --content " +
                          tmp.file("content.json") + " --roles " + tmp.file("roles.json") +
                          " --out " + tmp.file("poster.svg"));
    REQUIRE(render.exit_code == 0);
    const std::string svg = testutil::read_file(tmp.file("poster.svg"));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("Alpha Document") != std::string::npos);
  }

  TEST_CASE("poster equals the manually chained stages byte for byte") {
    TempDir tmp;
    testutil::write_file(tmp.file("raw.jsonl"), raw_corpus());
    REQUIRE(run_cli("ingest --input " + tmp.file("raw.jsonl") + " --out " + tmp.file("c.jsonl"))
                .exit_code == 0);

    REQUIRE(run_cli("poster --doc " + tmp.file("c.jsonl") + " --out " + tmp.file("poster.svg"))
                .exit_code == 0);

    REQUIRE(run_cli("summarize --doc " + tmp.file("c.jsonl") + " --out " + tmp.file("s.jsonl"))
                .exit_code == 0);
    REQUIRE(run_cli("paraphrase --summary " + tmp.file("s.jsonl") + " --offline --out " +
                    tmp.file("content.json"))
                .exit_code == 0);
    REQUIRE(run_cli("layout --content " + tmp.file("content.json") + " --out " +
                    tmp.file("layout.json"))
                .exit_code == 0);
    REQUIRE(run_cli("palette --out " + tmp.file("roles.json")).exit_code == 0);
    REQUIRE(run_cli("render --layout " + tmp.file("layout.json") + " --content " +
                    tmp.file("content.json") + " --roles " + tmp.file("roles.json") + " --out " +
                    tmp.file("chain.svg"))
                .exit_code == 0);

    CHECK(testutil::read_file(tmp.file("poster.svg")) ==
          testutil::read_file(tmp.file("chain.svg")));
    CHECK(!testutil::read_file(tmp.file("poster.svg")).empty());
  }

  TEST_CASE("training runs are byte-identical for a fixed seed") {
    TempDir tmp;
    testutil::write_file(tmp.file("raw.jsonl"), raw_corpus());
    REQUIRE(run_cli("ingest --input " + tmp.file("raw.jsonl") + " --out " + tmp.file("c.jsonl"))
                .exit_code == 0);
    const std::string flags = " --corpus " + tmp.file("c.jsonl") + " --val " + tmp.file("c.jsonl") +
                              " --k 2 --max-epochs 4 --seed 11";
    auto first = run_cli("train" + flags + " --out " + tmp.file("w1.json"));
    REQUIRE(first.exit_code == 0);
    auto second = run_cli("train" + flags + " --out " + tmp.file("w2.json"));
    REQUIRE(second.exit_code == 0);
    CHECK(testutil::read_file(tmp.file("w1.json")) == testutil::read_file(tmp.file("w2.json")));
    const json report = json::parse(first.output);
    CHECK(report.contains("epochs"));
    CHECK(report.contains("stop_reason"));
  }

  TEST_CASE("summaries honor an explicit cardinality") {
    TempDir tmp;
    testutil::write_file(tmp.file("raw.jsonl"), raw_corpus());
    REQUIRE(run_cli("ingest --input " + tmp.file("raw.jsonl") + " --out " + tmp.file("c.jsonl"))
                .exit_code == 0);
    REQUIRE(run_cli("summarize --doc " + tmp.file("c.jsonl") + " --k 2 --out " +
                    tmp.file("s.jsonl"))
                .exit_code == 0);
    const std::string lines = testutil::read_file(tmp.file("s.jsonl"));
    size_t count = 0;
    for (char c : lines)
      if (c == '\n') ++count;
    CHECK(count == 2);
    const json rec = json::parse(lines.substr(0, lines.find('\n')));
    CHECK(rec["k"] == 2);
    CHECK(rec["selection_order"].size() == 2);
  }
}
