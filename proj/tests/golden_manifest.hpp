#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testing_support {

struct GoldenCase {
  std::string name;
  std::string command;
  std::string fixture;
  std::vector<std::string> flags;
};

inline std::string source_path(const std::string& rel) {
  return std::string(FROBLAB_SOURCE_DIR) + "/" + rel;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<GoldenCase> golden_manifest() {
  std::vector<GoldenCase> out;
  std::istringstream in(slurp(source_path("tests/golden/manifest.txt")));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    GoldenCase c;
    words >> c.name >> c.command >> c.fixture;
    std::string w;
    while (words >> w) c.flags.push_back(w);
    if (!c.name.empty()) out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<std::string> golden_args(const GoldenCase& c) {
  std::vector<std::string> args{c.command, source_path("fixtures/" + c.fixture)};
  args.insert(args.end(), c.flags.begin(), c.flags.end());
  return args;
}

}  // namespace testing_support
