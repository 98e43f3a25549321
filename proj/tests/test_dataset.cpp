#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "citesum/dataset.hpp"
#include "citesum/errors.hpp"
#include "doctest.h"

using namespace citesum;

namespace {

SummExample make_example(const std::string& id, const std::string& cited,
                         const std::string& tgt = "REF does a thing.") {
  SummExample ex;
  ex.example_id = id;
  ex.src = "an abstract about " + id;
  ex.tgt = tgt;
  ex.cited_paper_id = cited;
  ex.citing_paper_id = "citing_" + id;
  return ex;
}

std::filesystem::path temp_dir(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("one group cannot be split") {
  std::vector<SummExample> examples;
  for (int i = 0; i < 5; ++i)
    examples.push_back(make_example("e" + std::to_string(i), "same_paper"));
  auto bundle = assign_splits(examples, {}, 1);
  CHECK(bundle.train.size() == 5);  // indivisible group stays in train
  CHECK(bundle.val.empty());
  CHECK(bundle.test.empty());
}

TEST_CASE("single singleton group lands somewhere, partition holds") {
  auto bundle = assign_splits({make_example("only", "g")}, {}, 3);
  CHECK(bundle.size() == 1);
}

TEST_CASE("20 singleton groups, ratios 0.9/0.05/0.05, seed 7") {
  std::vector<SummExample> examples;
  for (int i = 0; i < 20; ++i) {
    char id[8];
    std::snprintf(id, sizeof(id), "g%02d", i);
    examples.push_back(make_example(std::string("e") + id, id));
  }
  auto bundle = assign_splits(examples, {0.9, 0.05, 0.05}, 7);
  CHECK(bundle.test.size() == 1);
  CHECK(bundle.val.size() == 1);
  CHECK(bundle.train.size() == 18);
  // frozen from an independent SplitMix64/Fisher-Yates replica
  CHECK(bundle.test[0].cited_paper_id == "g04");
  CHECK(bundle.val[0].cited_paper_id == "g01");
}

TEST_CASE("no leakage and exact partition") {
  std::vector<SummExample> examples;
  for (int i = 0; i < 30; ++i)
    examples.push_back(make_example("e" + std::to_string(i),
                                    "paper" + std::to_string(i % 9)));
  auto bundle = assign_splits(examples, {0.6, 0.2, 0.2}, 42);
  CHECK(bundle.size() == examples.size());

  std::set<std::string> train_cited, eval_cited, all_ids;
  for (const auto& ex : bundle.train) train_cited.insert(ex.cited_paper_id);
  for (const auto* split : {&bundle.val, &bundle.test})
    for (const auto& ex : *split) eval_cited.insert(ex.cited_paper_id);
  for (const auto* split : {&bundle.train, &bundle.val, &bundle.test})
    for (const auto& ex : *split) all_ids.insert(ex.example_id);
  CHECK(all_ids.size() == examples.size());
  for (const auto& cited : eval_cited) CHECK(train_cited.count(cited) == 0);
}

TEST_CASE("splits are deterministic per seed") {
  std::vector<SummExample> examples;
  for (int i = 0; i < 24; ++i)
    examples.push_back(make_example("e" + std::to_string(i),
                                    "paper" + std::to_string(i / 2)));
  auto a = assign_splits(examples, {}, 99);
  auto b = assign_splits(examples, {}, 99);
  REQUIRE(a.train.size() == b.train.size());
  for (std::size_t i = 0; i < a.train.size(); ++i)
    CHECK(a.train[i].example_id == b.train[i].example_id);
  auto c = assign_splits(examples, {}, 100);
  bool same = a.test.size() == c.test.size();
  if (same)
    for (std::size_t i = 0; i < a.test.size(); ++i)
      same = same && a.test[i].example_id == c.test[i].example_id;
  CHECK_FALSE(same);
}

TEST_CASE("empty input and bad ratios are errors") {
  CHECK_THROWS_AS(assign_splits({}, {}, 1), EmptyInput);
  CHECK_THROWS_AS(assign_splits({make_example("e", "p")}, {0.5, 0.2, 0.2}, 1),
                  DataError);
}

TEST_CASE("write then read round-trips") {
  std::vector<SummExample> examples;
  for (int i = 0; i < 12; ++i)
    examples.push_back(make_example("e" + std::to_string(i),
                                    "paper" + std::to_string(i % 4)));
  auto bundle = assign_splits(examples, {0.5, 0.25, 0.25}, 5);
  auto dir = temp_dir("citesum_roundtrip");
  write_dataset(bundle, dir);
  auto loaded = read_dataset(dir);
  CHECK(loaded.train.size() == bundle.train.size());
  CHECK(loaded.val.size() == bundle.val.size());
  CHECK(loaded.test.size() == bundle.test.size());
  CHECK(loaded.seed == bundle.seed);
  CHECK(loaded.ratios.val == bundle.ratios.val);
  for (std::size_t i = 0; i < bundle.train.size(); ++i) {
    CHECK(loaded.train[i].example_id == bundle.train[i].example_id);
    CHECK(loaded.train[i].src == bundle.train[i].src);
    CHECK(loaded.train[i].tgt == bundle.train[i].tgt);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("write is byte-stable across runs") {
  std::vector<SummExample> examples;
  for (int i = 0; i < 8; ++i)
    examples.push_back(make_example("e" + std::to_string(i),
                                    "paper" + std::to_string(i % 3)));
  auto read_all = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  auto d1 = temp_dir("citesum_det1");
  auto d2 = temp_dir("citesum_det2");
  write_dataset(assign_splits(examples, {}, 17), d1);
  write_dataset(assign_splits(examples, {}, 17), d2);
  for (const char* f : {"train.jsonl", "val.jsonl", "test.jsonl", "meta.json"})
    CHECK(read_all(d1 / f) == read_all(d2 / f));
  std::filesystem::remove_all(d1);
  std::filesystem::remove_all(d2);
}

TEST_CASE("read rejects duplicate example ids and leakage") {
  auto dir = temp_dir("citesum_badread");
  DatasetBundle bundle;
  bundle.train = {make_example("dup", "p1")};
  bundle.val = {make_example("dup", "p2")};
  write_dataset(bundle, dir);
  CHECK_THROWS_AS(read_dataset(dir), SchemaViolation);

  DatasetBundle leaky;
  leaky.train = {make_example("a", "p1")};
  leaky.test = {make_example("b", "p1")};
  write_dataset(leaky, dir);
  CHECK_THROWS_AS(read_dataset(dir), SchemaViolation);

  DatasetBundle no_ref;
  no_ref.train = {make_example("a", "p1", "no token here.")};
  write_dataset(no_ref, dir);
  CHECK_THROWS_AS(read_dataset(dir), SchemaViolation);
  std::filesystem::remove_all(dir);
}

TEST_CASE("tfidf cosine fixtures") {
  std::vector<Document> corpus = {{"a", "alpha beta"}, {"b", "alpha gamma"}};
  auto idf = IdfModel::build(corpus);
  CHECK(tfidf_cosine("alpha beta", "alpha beta", idf) == doctest::Approx(1.0));
  CHECK(tfidf_cosine("alpha beta", "delta epsilon", idf) == doctest::Approx(0.0));
  // closed-form 2-doc oracle: idf(alpha)=1, idf(beta)=idf(gamma)=ln2+1
  CHECK(tfidf_cosine("alpha beta", "alpha gamma", idf) ==
        doctest::Approx(0.2586152916).epsilon(1e-9));
  // symmetry
  CHECK(tfidf_cosine("alpha beta", "alpha gamma", idf) ==
        doctest::Approx(tfidf_cosine("alpha gamma", "alpha beta", idf)));
  CHECK(tfidf_cosine("", "alpha", idf) == 0.0);
}

TEST_CASE("detect_overlap trivial fractions") {
  std::vector<Document> a = {{"a1", "one two three four"},
                             {"a2", "five six seven eight"}};
  auto subset = detect_overlap(a, a, 0.9);
  CHECK(subset.flagged_fraction == doctest::Approx(1.0));
  for (const auto& row : subset.rows) CHECK(row.similarity == doctest::Approx(1.0));

  std::vector<Document> b = {{"b1", "nine ten eleven twelve"}};
  auto disjoint = detect_overlap(a, b, 0.9);
  CHECK(disjoint.flagged_fraction == doctest::Approx(0.0));
  REQUIRE(disjoint.rows.size() == 1);
  CHECK_FALSE(disjoint.rows[0].flagged);

  CHECK_THROWS_AS(detect_overlap({}, b, 0.9), EmptyInput);
  CHECK_THROWS_AS(detect_overlap(a, {}, 0.9), EmptyInput);
}
