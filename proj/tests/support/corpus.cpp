#include "corpus.hpp"

#include <algorithm>

#include "legfront/io.hpp"

#ifndef LEGFRONT_CORPUS_DIR
#error "LEGFRONT_CORPUS_DIR must be defined"
#endif

namespace testing_support {

std::filesystem::path corpus_dir() { return LEGFRONT_CORPUS_DIR; }

std::vector<std::string> front_names() {
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir())) {
    if (entry.path().extension() == ".front") names.push_back(entry.path().filename().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

legfront::FrontDiagram load_diagram(const std::string& name) {
  return legfront::parse_front(legfront::read_text_file(corpus_dir() / name));
}

legfront::OrientedFront load_front(const std::string& name) {
  return legfront::orient(load_diagram(name));
}

legfront::GridDiagram load_grid(const std::string& name) {
  return legfront::parse_grid(legfront::read_text_file(corpus_dir() / name));
}

std::string word_of(const legfront::FrontDiagram& d) {
  std::string s = legfront::serialize_front(d);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::string load_word(const std::string& name) { return word_of(load_diagram(name)); }

}  // namespace testing_support
