#include <set>

#include "citesum/analysis.hpp"
#include "citesum/errors.hpp"
#include "doctest.h"

using namespace citesum;

namespace {

SummExample make_example(const std::string& id, const std::string& cited,
                         const std::string& src, const std::string& tgt,
                         const std::string& discipline = "") {
  SummExample ex;
  ex.example_id = id;
  ex.cited_paper_id = cited;
  ex.citing_paper_id = "citing";
  ex.src = src;
  ex.tgt = tgt;
  ex.discipline = discipline;
  return ex;
}

}  // namespace

TEST_CASE("top_discipline takes the first label") {
  PaperRecord p;
  p.fields_of_study = {"Computer Science", "Mathematics"};
  CHECK(top_discipline(p) == std::optional<std::string>{"Computer Science"});
  p.fields_of_study.clear();
  CHECK_FALSE(top_discipline(p).has_value());
}

TEST_CASE("single example word means") {
  DatasetBundle bundle;
  bundle.train = {make_example("e1", "p1", "a b c d e f g h i j", "REF x y")};
  auto stats = compute_stats(bundle);
  CHECK(stats.mean_src_words == doctest::Approx(10.0));
  CHECK(stats.mean_tgt_words == doctest::Approx(3.0));
  CHECK(stats.n_train == 1);
}

TEST_CASE("citation histogram counts appearances per cited paper") {
  DatasetBundle bundle;
  bundle.train = {make_example("e1", "p1", "a", "REF b"),
                  make_example("e2", "p1", "a", "REF c")};
  auto stats = compute_stats(bundle);
  CHECK(stats.unique_cited_papers == 1);
  CHECK(stats.mean_citations == doctest::Approx(2.0));
  REQUIRE(stats.citation_histogram.count(2));
  CHECK(stats.citation_histogram.at(2) == 1);
  CHECK(stats.citation_histogram.size() == 1);
}

TEST_CASE("discipline histogram covers labeled examples only") {
  DatasetBundle bundle;
  bundle.train = {make_example("e1", "p1", "a", "REF b", "Computer Science"),
                  make_example("e2", "p2", "a", "REF b", "Computer Science"),
                  make_example("e3", "p3", "a", "REF b", "Biology"),
                  make_example("e4", "p4", "a", "REF b")};
  auto stats = compute_stats(bundle);
  CHECK(stats.discipline_histogram.at("Computer Science") == 2);
  CHECK(stats.discipline_histogram.at("Biology") == 1);
  std::size_t mass = 0;
  for (const auto& [label, count] : stats.discipline_histogram) mass += count;
  CHECK(mass == 3);
}

TEST_CASE("stats are invariant to example order") {
  DatasetBundle a, b;
  a.train = {make_example("e1", "p1", "x y", "REF a"),
             make_example("e2", "p2", "x y z", "REF a b")};
  b.train = {a.train[1], a.train[0]};
  auto sa = compute_stats(a);
  auto sb = compute_stats(b);
  CHECK(sa.mean_src_words == sb.mean_src_words);
  CHECK(sa.citation_histogram == sb.citation_histogram);
}

TEST_CASE("annotation sampling is deterministic and bounded") {
  DatasetBundle bundle;
  for (int i = 0; i < 10; ++i)
    bundle.train.push_back(
        make_example("e" + std::to_string(i), "p" + std::to_string(i), "a", "REF b"));

  auto s1 = sample_for_annotation(bundle, 4, 21);
  auto s2 = sample_for_annotation(bundle, 4, 21);
  REQUIRE(s1.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(s1[i].example_id == s2[i].example_id);

  CHECK(sample_for_annotation(bundle, 0, 21).empty());
  auto all = sample_for_annotation(bundle, 10, 21);
  CHECK(all.size() == 10);
  CHECK_THROWS_AS(sample_for_annotation(bundle, 11, 21), KTooLarge);

  // without replacement: ids unique
  std::set<std::string> ids;
  for (const auto& ex : all) ids.insert(ex.example_id);
  CHECK(ids.size() == 10);
}
