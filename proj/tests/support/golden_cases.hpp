#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace golden {

struct Case {
  std::string file;  // name under the golden directory
  std::vector<std::string> args;
  int exit_code;
};

inline std::vector<Case> cases() {
  const std::vector<std::string> spectrum = {"spectrum", "--n", "2", "--gamma", "hemisphere", "--lambda-max", "21",
                                             "--no-cache"};
  const std::vector<std::string> index = {"index", "--n", "2", "--gamma", "hemisphere", "--m0", "1",
                                          "--sign", "+", "--p-minus", "1", "--p-plus", "0"};
  const std::vector<std::string> symmetry = {"certify", "symmetry-breaking", "--n", "3", "--gamma", "hemisphere",
                                             "--m0", "2", "--p-minus", "1", "--p-plus", "0"};
  std::vector<Case> out;
  for (const auto& [name, args] : {std::pair{"spectrum_n2_hemisphere", spectrum}, std::pair{"index_n2_m1_plus", index},
                                   std::pair{"symmetry_breaking_n3_m2", symmetry}}) {
    out.push_back({std::string(name) + ".json", args, 0});
    auto table = args;
    table.insert(table.end(), {"--format", "table"});
    out.push_back({std::string(name) + ".txt", table, 0});
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace golden
