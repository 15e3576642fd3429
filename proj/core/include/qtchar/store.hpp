#pragma once

#include <filesystem>

#include "qtchar/fm.hpp"

namespace qtchar {

/// Fundamental characters persisted as JSON files under a directory, one file
/// per (type, node). Files carry a format version; entries with another
/// version or that fail to parse count as misses and are overwritten. Writes
/// go to a temporary file renamed into place, so concurrent processes never
/// observe partial entries.
class DiskStore : public FundamentalStore {
 public:
  static constexpr int kFormatVersion = 1;

  explicit DiskStore(std::filesystem::path dir);

  /// $QTCHAR_CACHE_DIR, else $XDG_CACHE_HOME/qtchar, else ~/.cache/qtchar.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const DynkinDiagram& d, int node) const;

  std::optional<QCharacter> load(const DynkinDiagram& d, int node) override;
  void save(const DynkinDiagram& d, int node, const QCharacter& chi) override;

 private:
  std::filesystem::path dir_;
};

}  // namespace qtchar
