#include <string>
#include <vector>

#include "citesum/rouge.hpp"
#include "doctest.h"

using namespace citesum;

TEST_CASE("tokenizer lowercases alnum runs") {
  CHECK(rouge_tokenize("The Domain-Transfer Network (DTN)") ==
        std::vector<std::string>{"the", "domain", "transfer", "network", "dtn"});
  CHECK(rouge_tokenize("").empty());
  CHECK(rouge_tokenize("ROUGE-1/2/L") ==
        std::vector<std::string>{"rouge", "1", "2", "l"});
}

TEST_CASE("rouge_n on the cat ran / the cat sat") {
  auto cand = rouge_tokenize("the cat ran");
  auto ref = rouge_tokenize("the cat sat");
  auto r1 = rouge_n(cand, ref, 1);
  CHECK(r1.recall == doctest::Approx(2.0 / 3.0));
  CHECK(r1.precision == doctest::Approx(2.0 / 3.0));
  auto r2 = rouge_n(cand, ref, 2);
  CHECK(r2.recall == doctest::Approx(0.5));

  auto identical = rouge_n(cand, cand, 1);
  CHECK(identical.precision == 1.0);
  CHECK(identical.recall == 1.0);
  CHECK(identical.f1 == 1.0);
}

TEST_CASE("rouge_n clips repeated n-grams") {
  auto cand = rouge_tokenize("a a a");
  auto ref = rouge_tokenize("a b");
  auto r1 = rouge_n(cand, ref, 1);
  CHECK(r1.recall == doctest::Approx(0.5));  // "a" matches once, clipped
  CHECK(r1.precision == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("rouge_l LCS") {
  auto cand = rouge_tokenize("the cat ran");
  auto ref = rouge_tokenize("the cat sat");
  auto rl = rouge_l(cand, ref);
  CHECK(rl.recall == doctest::Approx(2.0 / 3.0));

  CHECK(rouge_l(rouge_tokenize("x y z"), rouge_tokenize("p q r")).f1 == 0.0);
  auto identity = rouge_l(ref, ref);
  CHECK(identity.precision == 1.0);
  CHECK(identity.recall == 1.0);
  CHECK(identity.f1 == 1.0);
}

TEST_CASE("score_pair composition and empty cases") {
  auto s = score_pair("the cat ran", "the cat sat");
  CHECK(s.r1.recall == doctest::Approx(2.0 / 3.0));
  CHECK(s.r2.recall == doctest::Approx(0.5));
  CHECK(s.rl.recall == doctest::Approx(2.0 / 3.0));

  auto empty = score_pair("", "the cat");
  CHECK(empty.r1.f1 == 0.0);
  CHECK(empty.r2.f1 == 0.0);
  CHECK(empty.rl.f1 == 0.0);

  auto ones = score_pair("x", "x");
  CHECK(ones.r1.f1 == 1.0);
  CHECK(ones.rl.f1 == 1.0);
}

TEST_CASE("swapping texts swaps precision and recall, keeps f1") {
  auto a = rouge_tokenize("alpha beta gamma delta");
  auto b = rouge_tokenize("beta gamma zeta");
  for (int n = 1; n <= 2; ++n) {
    auto fwd = rouge_n(a, b, n);
    auto rev = rouge_n(b, a, n);
    CHECK(fwd.precision == doctest::Approx(rev.recall));
    CHECK(fwd.recall == doctest::Approx(rev.precision));
    CHECK(fwd.f1 == doctest::Approx(rev.f1));
  }
  auto fwd = rouge_l(a, b);
  auto rev = rouge_l(b, a);
  CHECK(fwd.precision == doctest::Approx(rev.recall));
  CHECK(fwd.f1 == doctest::Approx(rev.f1));
}

TEST_CASE("rl recall never exceeds r1 recall") {
  auto cand = rouge_tokenize("d c b a e");
  auto ref = rouge_tokenize("a b c d");
  auto r1 = rouge_n(cand, ref, 1);
  auto rl = rouge_l(cand, ref);
  CHECK(rl.recall <= r1.recall);
  CHECK(r1.recall == doctest::Approx(1.0));
  CHECK(rl.recall < 1.0);  // order matters for LCS
}

TEST_CASE("porter stemmer spot checks") {
  CHECK(porter_stem("caresses") == "caress");
  CHECK(porter_stem("ponies") == "poni");
  CHECK(porter_stem("relational") == "relat");
  CHECK(porter_stem("hopping") == "hop");
  CHECK(porter_stem("cat") == "cat");
  // stemming makes inflection variants match
  RougeOptions stemmed{true};
  auto s = score_pair("the model proposes filters", "the model proposed filter",
                      stemmed);
  CHECK(s.r1.recall == doctest::Approx(1.0));
}
