#pragma once
// Shared fixtures: naive reference implementations written straight from the
// set-function definitions (explicit loops over sets, no incremental state),
// random instance generators, and subprocess helpers for CLI tests.
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "postdoc/corpus.hpp"
#include "postdoc/dsf.hpp"
#include "postdoc/rng.hpp"

namespace testutil {

using postdoc::ContentElement;
using postdoc::Document;
using postdoc::fisher_yates_shuffle;
using postdoc::Modality;
using postdoc::SplitMix64;
using postdoc::WeightVector;

// g_u(A) = (sum_{x in A} x_u) * (|D| + sum_{y in D\A} y_u)
//        + sum_{x in A_I} sum_{y in A_T} x_u * y_u
// evaluated with literal set loops.
inline double naive_g(const Document& doc, const std::vector<int>& selected, int u) {
  const std::set<int> in(selected.begin(), selected.end());
  const int n = (int)doc.elements.size();
  double sel = 0.0, rest = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = doc.elements[i].embedding[u];
    if (in.count(i))
      sel += v;
    else
      rest += v;
  }
  double h = 0.0;
  for (int i : in)
    if (doc.elements[i].modality == Modality::image)
      for (int j : in)
        if (doc.elements[j].modality == Modality::text)
          h += doc.elements[i].embedding[u] * doc.elements[j].embedding[u];
  return sel * ((double)n + rest) + h;
}

inline double naive_f(const Document& doc, const std::vector<int>& selected,
                      const WeightVector& w) {
  double f = 0.0;
  for (int u = 0; u < (int)w.size(); ++u) f += w[u] * std::sqrt(naive_g(doc, selected, u));
  return f;
}

// From-scratch greedy: per step evaluates naive_f over every candidate,
// strict improvement with lowest-ordinal ties.
inline std::vector<int> reference_greedy(const Document& doc, const WeightVector& w, int k) {
  std::vector<int> selected;
  std::set<int> in;
  const int n = (int)doc.elements.size();
  const int steps = std::min(k, n);
  for (int step = 0; step < steps; ++step) {
    int best = -1;
    double best_f = 0.0;
    for (int c = 0; c < n; ++c) {
      if (in.count(c)) continue;
      std::vector<int> trial = selected;
      trial.push_back(c);
      const double f = naive_f(doc, trial, w);
      if (best < 0 || f > best_f) {
        best = c;
        best_f = f;
      }
    }
    selected.push_back(best);
    in.insert(best);
  }
  return selected;
}

// The worked d=2 instance: t1=(1,0), t2=(0,1), i1=(0.5,0.5).
inline Document toy_doc() {
  Document doc;
  doc.doc_id = "toy";
  doc.title = "Toy";
  doc.elements = {
      ContentElement{"t1", 0, Modality::text, "alpha sentence", "", {1.0, 0.0}},
      ContentElement{"t2", 1, Modality::text, "beta sentence", "", {0.0, 1.0}},
      ContentElement{"i1", 2, Modality::image, "gamma caption", "img.png", {0.5, 0.5}},
  };
  return doc;
}

inline Document random_doc(SplitMix64& rng, int n, int d, double image_frac = 0.3) {
  Document doc;
  doc.doc_id = "rnd";
  doc.elements.resize(n);
  for (int i = 0; i < n; ++i) {
    ContentElement& el = doc.elements[i];
    el.id = "e" + std::to_string(i);
    el.ordinal = i;
    el.modality = rng.unit() < image_frac ? Modality::image : Modality::text;
    el.text = "element " + std::to_string(i);
    el.embedding.resize(d);
    double norm = 0.0;
    for (int u = 0; u < d; ++u) {
      el.embedding[u] = rng.unit() + 1e-9;
      norm += el.embedding[u];
    }
    for (int u = 0; u < d; ++u) el.embedding[u] /= norm;
  }
  return doc;
}

inline WeightVector random_weights(SplitMix64& rng, int d) {
  WeightVector w(d);
  for (int u = 0; u < d; ++u) w[u] = rng.unit();
  return w;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "postdoc-XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    if (!mkdtemp(buf.data())) throw std::runtime_error("mkdtemp failed");
    path = buf.data();
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

// Runs the CLI binary with a fixed environment (deterministic timestamps).
inline CliResult run_cli(const std::string& args) {
#ifndef POSTDOC_CLI_PATH
#error "POSTDOC_CLI_PATH must be defined for CLI tests"
#endif
  const std::string cmd = "SOURCE_DATE_EPOCH=1700000000 " POSTDOC_CLI_PATH " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  CliResult res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.output.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace testutil
