// tests/test_align.cpp

// Copyright 2026  ttsprep authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "ttsprep/align.hpp"

using namespace ttsprep;

namespace {

std::vector<Syllable> ref_of(const std::vector<std::string>& texts) {
  std::vector<Syllable> out;
  for (const auto& t : texts) out.push_back({t, false});
  return out;
}

std::vector<HypToken> hyp_of(const std::vector<std::string>& texts,
                             double start = 0.0, double dur = 0.2,
                             double gap = 0.0) {
  std::vector<HypToken> out;
  double t = start;
  for (const auto& text : texts) {
    out.push_back({text, t, dur});
    t += dur + gap;
  }
  return out;
}

// Distance-only two-row DP, independent of the aligner's full table and
// backtrace.
int edit_distance_oracle(const std::vector<std::string>& ref,
                         const std::vector<std::string>& hyp) {
  std::vector<int> prev(hyp.size() + 1), cur(hyp.size() + 1);
  for (std::size_t j = 0; j <= hyp.size(); ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= ref.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= hyp.size(); ++j) {
      const int sub = prev[j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[hyp.size()];
}

}  // namespace

TEST_CASE("load_ctm") {
  testutil::TempDir dir("ctm");
  const auto path = dir.path() / "h.ctm";

  SUBCASE("empty file gives an empty mapping") {
    testutil::write_text(path, "");
    CHECK(load_ctm(path).empty());
  }

  SUBCASE("tokens group by utterance and sort by start") {
    testutil::write_text(path,
                         "u1 1 0.50 0.20 chào\n"
                         "u1 1 0.10 0.30 xin\n"
                         "u2 1 0.00 0.25 hai\n");
    const auto map = load_ctm(path);
    REQUIRE(map.size() == 2);
    REQUIRE(map.at("u1").size() == 2);
    CHECK(map.at("u1")[0].text == "xin");
    CHECK(map.at("u1")[0].start_s == 0.10);
    CHECK(map.at("u1")[1].text == "chào");
    CHECK(map.at("u2").size() == 1);
  }

  SUBCASE("malformed line reports its number") {
    testutil::write_text(path, "u1 1 0.0 0.2 xin\nnot enough fields\n");
    try {
      load_ctm(path);
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }

  SUBCASE("non-positive duration is rejected") {
    testutil::write_text(path, "u1 1 0.0 -0.2 xin\n");
    CHECK_THROWS_AS(load_ctm(path), Error);
    testutil::write_text(path, "u1 1 0.0 0 xin\n");
    CHECK_THROWS_AS(load_ctm(path), Error);
  }
}

TEST_CASE("align_hyp_to_ref basics") {
  SUBCASE("identical sequences match everywhere") {
    const auto ref = ref_of({"a", "b", "c"});
    const auto al = align_hyp_to_ref(ref, hyp_of({"a", "b", "c"}));
    CHECK(al.wer == 0.0);
    CHECK(al.matches == 3);
    CHECK(al.edit_distance() == 0);
    for (const auto& op : al.ops) CHECK(op.type == EditOpType::kMatch);
  }

  SUBCASE("one substitution in four tokens is wer 0.25") {
    const auto al = align_hyp_to_ref(ref_of({"a", "b", "c", "d"}),
                                     hyp_of({"a", "x", "c", "d"}));
    CHECK(al.wer == 0.25);
    CHECK(al.substitutions == 1);
    CHECK(edit_distance_oracle({"a", "b", "c", "d"}, {"a", "x", "c", "d"}) ==
          al.edit_distance());
  }

  SUBCASE("empty hypothesis deletes everything") {
    const auto al = align_hyp_to_ref(ref_of({"a", "b"}), {});
    CHECK(al.wer == 1.0);
    CHECK(al.deletions == 2);
    REQUIRE(al.ops.size() == 2);
    CHECK(al.ops[0].type == EditOpType::kDeleteRef);
    CHECK(al.ops[1].type == EditOpType::kDeleteRef);
  }

  SUBCASE("empty reference is a precondition violation") {
    CHECK_THROWS_AS(align_hyp_to_ref({}, hyp_of({"a"})), Error);
  }

  SUBCASE("backtrace tie order is fixed") {
    // ref [a, b] vs hyp [b]: Match wins over Substitute, so the deletion
    // lands on `a`.
    const auto al = align_hyp_to_ref(ref_of({"a", "b"}), hyp_of({"b"}));
    REQUIRE(al.ops.size() == 2);
    CHECK(al.ops[0].type == EditOpType::kDeleteRef);
    CHECK(al.ops[0].ref_index == 0);
    CHECK(al.ops[1].type == EditOpType::kMatch);
    CHECK(al.ops[1].ref_index == 1);
    CHECK(al.ops[1].hyp_index == 0);
  }

  SUBCASE("wer is invariant under relabeling") {
    const auto a = align_hyp_to_ref(ref_of({"x", "y", "x"}),
                                    hyp_of({"x", "z", "x"}));
    const auto b = align_hyp_to_ref(ref_of({"một", "hai", "một"}),
                                    hyp_of({"một", "ba", "một"}));
    CHECK(a.wer == b.wer);
  }
}

TEST_CASE("align_hyp_to_ref equals the DP oracle on random short strings") {
  std::mt19937 rng(99);
  const std::string alphabet = "abc";
  for (int trial = 0; trial < 500; ++trial) {
    const int nr = 1 + static_cast<int>(rng() % 6);
    const int nh = static_cast<int>(rng() % 7);
    std::vector<std::string> ref_texts, hyp_texts;
    for (int i = 0; i < nr; ++i) ref_texts.push_back({alphabet[rng() % 3]});
    for (int j = 0; j < nh; ++j) hyp_texts.push_back({alphabet[rng() % 3]});

    const auto al = align_hyp_to_ref(ref_of(ref_texts), hyp_of(hyp_texts));
    CHECK(al.edit_distance() == edit_distance_oracle(ref_texts, hyp_texts));
    // Conservation: every index consumed exactly once.
    CHECK(al.matches + al.substitutions + al.deletions == nr);
    CHECK(al.matches + al.substitutions + al.insertions == nh);
    CHECK(al.wer == doctest::Approx(static_cast<double>(al.edit_distance()) /
                                    nr));
  }
}

TEST_CASE("anchors are maximal match runs of the configured length") {
  // M M M S M M D M -> runs of 3, 2, 1; only the first qualifies at 3.
  const auto ref = ref_of({"a", "b", "c", "d", "e", "f", "g", "h"});
  const auto hyp = hyp_of({"a", "b", "c", "X", "e", "f", "h"});
  const auto al = align_hyp_to_ref(ref, hyp, 3);
  REQUIRE(al.anchors.size() == 1);
  CHECK(al.anchors[0].ref_start == 0);
  CHECK(al.anchors[0].length == 3);

  const auto al2 = align_hyp_to_ref(ref, hyp, 2);
  REQUIRE(al2.anchors.size() == 2);
  CHECK(al2.anchors[1].ref_start == 4);
  CHECK(al2.anchors[1].length == 2);
}

TEST_CASE("transfer_timestamps") {
  SUBCASE("matches copy hypothesis times verbatim") {
    const auto ref = ref_of({"a", "b"});
    const auto hyp = hyp_of({"a", "b"}, 1.0, 0.2, 0.1);
    const auto tokens =
        transfer_timestamps(ref, align_hyp_to_ref(ref, hyp), hyp);
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0].start_s == 1.0);
    CHECK(tokens[0].end_s == 1.2);
    CHECK(tokens[0].aligned);
    CHECK(tokens[1].start_s == 1.3);
    CHECK(tokens[1].end_s == 1.5);
  }

  SUBCASE("deleted reference tokens stay unaligned") {
    const auto ref = ref_of({"a", "b", "c"});
    const auto hyp = hyp_of({"a", "c"});
    const auto tokens =
        transfer_timestamps(ref, align_hyp_to_ref(ref, hyp), hyp);
    CHECK(tokens[0].aligned);
    CHECK_FALSE(tokens[1].aligned);
    CHECK(tokens[2].aligned);
  }

  SUBCASE("substitutions obey the trust flag") {
    const auto ref = ref_of({"a", "b"});
    const auto hyp = hyp_of({"a", "x"});
    const auto al = align_hyp_to_ref(ref, hyp);
    CHECK(transfer_timestamps(ref, al, hyp, true)[1].aligned);
    CHECK_FALSE(transfer_timestamps(ref, al, hyp, false)[1].aligned);
  }

  SUBCASE("monotone hypotheses transfer to sorted non-overlapping tokens") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 8);
      std::vector<std::string> texts;
      for (int i = 0; i < n; ++i) texts.push_back({char('a' + rng() % 3)});
      const auto hyp = hyp_of(texts, 0.1, 0.15, 0.05);
      const auto ref = ref_of(texts);
      const auto tokens =
          transfer_timestamps(ref, align_hyp_to_ref(ref, hyp), hyp);
      double prev_end = -1.0;
      for (const auto& t : tokens) {
        if (!t.aligned) continue;
        CHECK(t.start_s >= prev_end);
        CHECK(t.end_s > t.start_s);
        prev_end = t.end_s;
      }
    }
  }
}

TEST_CASE("detect_internal_silences") {
  auto timed = [](double start, double end) {
    TimedToken t;
    t.syllable = {"x", false};
    t.start_s = start;
    t.end_s = end;
    t.aligned = true;
    return t;
  };

  SUBCASE("short gaps are ignored") {
    const std::vector<TimedToken> tokens = {timed(0.0, 0.2), timed(0.22, 0.4)};
    CHECK(detect_internal_silences(tokens, 0.05).empty());
  }

  SUBCASE("a 0.30 s gap is reported with its position") {
    const std::vector<TimedToken> tokens = {timed(0.5, 1.0), timed(1.3, 1.6)};
    const auto spans = detect_internal_silences(tokens, 0.05);
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].start_s == 1.0);
    CHECK(spans[0].end_s == 1.3);
    CHECK(spans[0].duration_s() == doctest::Approx(0.3));
    CHECK(spans[0].after_ref_index == 0);
  }

  SUBCASE("leading and trailing silence is never internal") {
    // 2 s of nothing before the first token; nothing after the last.
    const std::vector<TimedToken> tokens = {timed(2.0, 2.2), timed(2.3, 2.5)};
    const auto spans = detect_internal_silences(tokens, 0.05);
    CHECK(spans.size() == 1);  // only the 0.1 s internal gap
    CHECK(spans[0].start_s == 2.2);
  }

  SUBCASE("unaligned tokens do not bound silences") {
    std::vector<TimedToken> tokens = {timed(0.0, 0.2), timed(0.0, 0.0),
                                      timed(0.5, 0.7)};
    tokens[1].aligned = false;
    const auto spans = detect_internal_silences(tokens, 0.05);
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].after_ref_index == 0);
    CHECK(spans[0].start_s == 0.2);
    CHECK(spans[0].end_s == 0.5);
  }

  SUBCASE("fewer than two aligned tokens yields nothing") {
    CHECK(detect_internal_silences({timed(0.0, 0.2)}, 0.05).empty());
    CHECK(detect_internal_silences({}, 0.05).empty());
  }

  SUBCASE("every span is at least min_gap long") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<TimedToken> tokens;
      double t = 0.0;
      const int n = 2 + static_cast<int>(rng() % 10);
      for (int i = 0; i < n; ++i) {
        const double dur = 0.05 + (rng() % 20) * 0.01;
        tokens.push_back(timed(t, t + dur));
        t += dur + (rng() % 30) * 0.01;
      }
      const double min_gap = 0.05;
      for (const auto& span : detect_internal_silences(tokens, min_gap)) {
        CHECK(span.duration_s() >= min_gap);
      }
    }
  }
}
