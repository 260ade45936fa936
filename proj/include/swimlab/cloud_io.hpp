#pragma once
#include <filesystem>
#include <iosfwd>
#include <string>

#include "swimlab/scan.hpp"

namespace swimlab {

// Text format `swimcloud v1`:
//   line 1: swimcloud v1
//   line 2: frequency=<Hz> speed=<m/s> acquisition=<Ideal|LockIn> seed=<u64> n=<count>
//   then n lines: x y z re im   (9 significant digits, LF endings)
// Byte-exact across platforms for identical inputs.
std::string cloud_to_string(const FieldCloud& cloud);
void write_cloud(const FieldCloud& cloud, const std::filesystem::path& file);

FieldCloud cloud_from_string(const std::string& text);
FieldCloud read_cloud(const std::filesystem::path& file);

}  // namespace swimlab
