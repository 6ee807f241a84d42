#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace decho {

// Loss-free formatting: shortest representation with up to 17 significant
// digits, round-trip exact for doubles.
std::string format_real(double v);

// Comma-separated, LF line endings, mandatory header row.  Writing is fully
// deterministic: identical rows give byte-identical files.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path,
            const std::vector<std::string>& header);
  ~CsvWriter();

  void row(const std::vector<std::string>& cells);
  void close();

 private:
  std::ofstream out_;
  std::size_t columns_;
};

// FNV-1a 64-bit over a file's bytes; used for output checksums.
std::uint64_t fnv1a64_file(const std::filesystem::path& path);

}  // namespace decho
