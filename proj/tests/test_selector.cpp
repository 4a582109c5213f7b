#include <cmath>

#include "doctest.h"
#include "postdoc/errors.hpp"
#include "postdoc/selector.hpp"
#include "testutil.hpp"

using namespace postdoc;
using testutil::naive_f;
using testutil::random_doc;
using testutil::random_weights;
using testutil::reference_greedy;
using testutil::toy_doc;

TEST_SUITE("selector") {
  TEST_CASE("worked instance: greedy picks i1 then t1") {
    const Document doc = toy_doc();
    const SummarySelection sel = greedy_select(doc, {0.5, 0.5}, 2);
    CHECK(sel.selection_order == std::vector<int>{2, 0});
    CHECK(sel.f_value == doctest::Approx(1.82514).epsilon(1e-5));
    CHECK(sel.document_order == std::vector<int>{0, 2});
  }

  TEST_CASE("K at least N selects the whole document") {
    const Document doc = toy_doc();
    const SummarySelection sel = greedy_select(doc, {0.5, 0.5}, 10);
    CHECK(sel.document_order == std::vector<int>{0, 1, 2});
  }

  TEST_CASE("zero weights fall back to ordinal order") {
    const Document doc = toy_doc();
    const SummarySelection sel = greedy_select(doc, {0.0, 0.0}, 2);
    CHECK(sel.selection_order == std::vector<int>{0, 1});
    CHECK(sel.f_value == 0.0);
  }

  TEST_CASE("empty document and bad K are rejected") {
    Document empty;
    empty.doc_id = "empty";
    CHECK_THROWS_AS((void)greedy_select(empty, {0.5, 0.5}, 1), validation_error);
    CHECK_THROWS_AS((void)greedy_select(toy_doc(), {0.5, 0.5}, 0), validation_error);
  }

  TEST_CASE("worked instance: brute force finds {t1,t2}") {
    const Document doc = toy_doc();
    const SummarySelection opt = brute_force_select(doc, {0.5, 0.5}, 2);
    CHECK(opt.document_order == std::vector<int>{0, 1});
    CHECK(opt.f_value == doctest::Approx(1.87083).epsilon(1e-5));
  }

  TEST_CASE("brute force with K=1 picks the best singleton") {
    const Document doc = toy_doc();
    const SummarySelection opt = brute_force_select(doc, {0.5, 0.5}, 1);
    CHECK(opt.document_order == std::vector<int>{2});
  }

  TEST_CASE("brute force with K=N returns the full set") {
    const Document doc = toy_doc();
    const SummarySelection opt = brute_force_select(doc, {0.5, 0.5}, 3);
    CHECK(opt.document_order == std::vector<int>{0, 1, 2});
  }

  TEST_CASE("brute force refuses N beyond the enumeration guard") {
    testutil::SplitMix64 rng(3);
    const Document doc = random_doc(rng, 21, 2);
    CHECK_THROWS_AS((void)brute_force_select(doc, {0.5, 0.5}, 2), validation_error);
  }

  TEST_CASE("greedy achieves the (1 - 1/e) guarantee on random instances") {
    testutil::SplitMix64 rng(23);
    const double bound = 1.0 - 1.0 / std::exp(1.0);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 3 + (int)rng.below(8);
      const int d = 1 + (int)rng.below(6);
      const int k = 1 + (int)rng.below(4);
      const Document doc = random_doc(rng, n, d);
      const WeightVector w = random_weights(rng, d);
      const double fg = greedy_select(doc, w, k).f_value;
      const double fb = brute_force_select(doc, w, k).f_value;
      CHECK(fg >= bound * fb - 1e-9);
      CHECK(fg <= fb + 1e-9);
    }
  }

  TEST_CASE("greedy matches the from-scratch reference implementation") {
    testutil::SplitMix64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + (int)rng.below(9);
      const int d = 1 + (int)rng.below(6);
      const int k = 1 + (int)rng.below(n);
      const Document doc = random_doc(rng, n, d);
      const WeightVector w = random_weights(rng, d);
      const SummarySelection sel = greedy_select(doc, w, k);
      CHECK(sel.selection_order == reference_greedy(doc, w, k));
      CHECK(sel.f_value == doctest::Approx(naive_f(doc, sel.selection_order, w)).epsilon(1e-9));
    }
  }

  TEST_CASE("parallel and serial scans select identically") {
    testutil::SplitMix64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 20 + (int)rng.below(30);
      const int d = 1 + (int)rng.below(16);
      const Document doc = random_doc(rng, n, d);
      const WeightVector w = random_weights(rng, d);
      SelectOptions serial, parallel;
      serial.parallel = false;
      parallel.parallel = true;
      const SummarySelection a = greedy_select(doc, w, 8, serial);
      const SummarySelection b = greedy_select(doc, w, 8, parallel);
      CHECK(a.selection_order == b.selection_order);
      CHECK(a.f_value == b.f_value);  // bitwise
    }
  }

  TEST_CASE("selection size is min(K, N) with unique ordinals") {
    testutil::SplitMix64 rng(37);
    const Document doc = random_doc(rng, 6, 3);
    const WeightVector w = random_weights(rng, 3);
    for (int k : {1, 3, 6, 9}) {
      const SummarySelection sel = greedy_select(doc, w, k);
      CHECK((int)sel.selection_order.size() == std::min(k, 6));
      std::set<int> uniq(sel.selection_order.begin(), sel.selection_order.end());
      CHECK(uniq.size() == sel.selection_order.size());
    }
  }

  TEST_CASE("choose_k stops once selected text exceeds the character budget") {
    // 10 text elements whose greedy order is by ordinal (uniform embeddings,
    // uniform weights): each sentence is 100 bytes, budget 100 tokens = 400
    // chars, so the 4th text element is the last that starts within budget.
    Document doc;
    doc.doc_id = "budget";
    const std::string sentence(100, 'x');
    for (int i = 0; i < 10; ++i)
      doc.elements.push_back(
          ContentElement{"t" + std::to_string(i), i, Modality::text, sentence, "", {0.5, 0.5}});
    const WeightVector w{0.5, 0.5};
    CHECK(choose_k(doc, w, 100) == 4);
    // images cost nothing: an image-only document never exceeds the budget
    Document imgs;
    imgs.doc_id = "imgs";
    for (int i = 0; i < 5; ++i)
      imgs.elements.push_back(
          ContentElement{"i" + std::to_string(i), i, Modality::image, "", "p.png", {0.5, 0.5}});
    CHECK(choose_k(imgs, w, 1) == 5);
    // a first element larger than the whole budget still yields K = 1
    Document one;
    one.doc_id = "one";
    one.elements.push_back(ContentElement{"t0", 0, Modality::text, sentence, "", {1.0, 0.0}});
    CHECK(choose_k(one, w, 1) == 1);
  }
}
