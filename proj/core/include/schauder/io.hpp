#pragma once

#include <filesystem>
#include <functional>
#include <string>

namespace schauder {

/// Render a double with 17 significant digits (round-trip exact).
std::string format17(double v);

/// Write a file atomically: stream into `<path>.tmp`, then rename over
/// `path`. The writer receives the open stream.
void atomic_write(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& writer);

} // namespace schauder
