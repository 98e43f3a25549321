// Porter stemming algorithm (Porter 1980), operating on lowercase ASCII words.

#include <string>

#include "citesum/rouge.hpp"

namespace citesum {

namespace {

bool is_vowel_at(const std::string& w, std::size_t i) {
  char c = w[i];
  if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return true;
  // 'y' is a vowel when preceded by a consonant.
  if (c == 'y' && i > 0) return !is_vowel_at(w, i - 1);
  return false;
}

// Porter's m: number of vowel-consonant sequences in w[0..len).
int measure(const std::string& w, std::size_t len) {
  int m = 0;
  bool prev_vowel = false;
  for (std::size_t i = 0; i < len; ++i) {
    bool v = is_vowel_at(w, i);
    if (!v && prev_vowel) ++m;
    prev_vowel = v;
  }
  return m;
}

bool has_vowel(const std::string& w, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (is_vowel_at(w, i)) return true;
  return false;
}

bool ends_with(const std::string& w, const char* suffix, std::size_t* stem_len) {
  std::size_t slen = std::char_traits<char>::length(suffix);
  if (w.size() < slen) return false;
  if (w.compare(w.size() - slen, slen, suffix) != 0) return false;
  *stem_len = w.size() - slen;
  return true;
}

bool double_consonant(const std::string& w, std::size_t len) {
  if (len < 2) return false;
  if (w[len - 1] != w[len - 2]) return false;
  return !is_vowel_at(w, len - 1);
}

// consonant-vowel-consonant, final consonant not w/x/y
bool cvc(const std::string& w, std::size_t len) {
  if (len < 3) return false;
  if (is_vowel_at(w, len - 3) || !is_vowel_at(w, len - 2) ||
      is_vowel_at(w, len - 1))
    return false;
  char c = w[len - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

void replace_suffix(std::string& w, std::size_t stem_len, const char* repl) {
  w.resize(stem_len);
  w += repl;
}

void step1(std::string& w) {
  std::size_t s;
  // 1a
  if (ends_with(w, "sses", &s)) {
    replace_suffix(w, s, "ss");
  } else if (ends_with(w, "ies", &s)) {
    replace_suffix(w, s, "i");
  } else if (ends_with(w, "ss", &s)) {
    // keep
  } else if (ends_with(w, "s", &s) && s > 0) {
    w.resize(s);
  }
  // 1b
  bool cleanup = false;
  if (ends_with(w, "eed", &s)) {
    if (measure(w, s) > 0) w.resize(s + 2);
  } else if (ends_with(w, "ed", &s) && has_vowel(w, s)) {
    w.resize(s);
    cleanup = true;
  } else if (ends_with(w, "ing", &s) && has_vowel(w, s)) {
    w.resize(s);
    cleanup = true;
  }
  if (cleanup) {
    if (ends_with(w, "at", &s) || ends_with(w, "bl", &s) ||
        ends_with(w, "iz", &s)) {
      w += 'e';
    } else if (double_consonant(w, w.size())) {
      char c = w.back();
      if (c != 'l' && c != 's' && c != 'z') w.pop_back();
    } else if (measure(w, w.size()) == 1 && cvc(w, w.size())) {
      w += 'e';
    }
  }
  // 1c
  if (ends_with(w, "y", &s) && s > 0 && has_vowel(w, s)) w[s] = 'i';
}

struct Rule {
  const char* suffix;
  const char* repl;
};

void apply_rules(std::string& w, const Rule* rules, std::size_t count,
                 int min_measure) {
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t s;
    if (ends_with(w, rules[i].suffix, &s)) {
      if (measure(w, s) > min_measure - 1) replace_suffix(w, s, rules[i].repl);
      return;  // longest match only; Porter rules are disjoint by ending
    }
  }
}

const Rule kStep2[] = {
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
    {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
    {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"},
    {"ation", "ate"},   {"ator", "ate"},    {"alism", "al"},  {"iveness", "ive"},
    {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},  {"iviti", "ive"},
    {"biliti", "ble"},
};

const Rule kStep3[] = {
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
};

const Rule kStep4[] = {
    {"al", ""},   {"ance", ""}, {"ence", ""}, {"er", ""},   {"ic", ""},
    {"able", ""}, {"ible", ""}, {"ant", ""},  {"ement", ""}, {"ment", ""},
    {"ent", ""},  {"ou", ""},   {"ism", ""},  {"ate", ""},  {"iti", ""},
    {"ous", ""},  {"ive", ""},  {"ize", ""},
};

void step4(std::string& w) {
  std::size_t s;
  // "ion" only after s or t
  if (ends_with(w, "ion", &s) && s > 0 && (w[s - 1] == 's' || w[s - 1] == 't')) {
    if (measure(w, s) > 1) w.resize(s);
    return;
  }
  for (const Rule& rule : kStep4) {
    if (ends_with(w, rule.suffix, &s)) {
      if (measure(w, s) > 1) w.resize(s);
      return;
    }
  }
}

void step5(std::string& w) {
  std::size_t s;
  if (ends_with(w, "e", &s)) {
    int m = measure(w, s);
    if (m > 1 || (m == 1 && !cvc(w, s))) w.resize(s);
  }
  if (w.size() > 1 && w.back() == 'l' && double_consonant(w, w.size()) &&
      measure(w, w.size()) > 1)
    w.pop_back();
}

}  // namespace

std::string porter_stem(const std::string& word) {
  if (word.size() <= 2) return word;
  std::string w = word;
  step1(w);
  apply_rules(w, kStep2, sizeof(kStep2) / sizeof(Rule), 1);
  apply_rules(w, kStep3, sizeof(kStep3) / sizeof(Rule), 1);
  step4(w);
  step5(w);
  return w;
}

}  // namespace citesum
