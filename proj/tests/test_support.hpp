#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetcube/error.hpp"
#include "posetcube/poset.hpp"

namespace testsupport {

inline posetcube::Poset mk(std::vector<std::string> elements,
                           std::vector<std::pair<std::string, std::string>> covers = {}) {
  return posetcube::Poset::from_cover_relations(std::move(elements), covers);
}

template <typename F>
std::optional<posetcube::ErrorKind> thrown_kind(F&& f) {
  try {
    f();
  } catch (const posetcube::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

class TempFile {
 public:
  TempFile(const std::string& content, const std::string& suffix) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("posetcube_test_" + std::to_string(++counter) + suffix);
    std::ofstream out(path_);
    out << content;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace testsupport
