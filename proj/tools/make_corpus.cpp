// Writes the bundled corpus as JSON files into the given directory.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "rankwb/corpus_files.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: rankwb_corpus <directory>\n";
    return 2;
  }
  const std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  for (const auto& [name, doc] : rankwb::corpus::documents()) {
    std::ofstream file(dir / name);
    file << doc.dump(2) << "\n";
    if (!file) {
      std::cerr << "cannot write " << (dir / name).string() << "\n";
      return 2;
    }
  }
  return 0;
}
