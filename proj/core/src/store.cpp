#include "qtchar/store.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "qtchar/error.hpp"
#include "qtchar/io.hpp"

namespace qtchar {

namespace fs = std::filesystem;

DiskStore::DiskStore(fs::path dir) : dir_(std::move(dir)) {}

fs::path DiskStore::default_dir() {
  if (const char* v = std::getenv("QTCHAR_CACHE_DIR"); v && *v) return v;
  if (const char* v = std::getenv("XDG_CACHE_HOME"); v && *v) return fs::path(v) / "qtchar";
  if (const char* v = std::getenv("HOME"); v && *v) return fs::path(v) / ".cache" / "qtchar";
  return fs::temp_directory_path() / "qtchar-cache";
}

fs::path DiskStore::path_for(const DynkinDiagram& d, int node) const {
  return dir_ / (d.name() + "-" + std::to_string(node) + ".json");
}

std::optional<QCharacter> DiskStore::load(const DynkinDiagram& d, int node) {
  std::ifstream in(path_for(d, node));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const auto j = nlohmann::json::parse(buf.str());
    if (j.value("format_version", 0) != kFormatVersion) return std::nullopt;
    if (j.value("node", 0) != node) return std::nullopt;
    return character_from_json(j.at("character").dump());
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

void DiskStore::save(const DynkinDiagram& d, int node, const QCharacter& chi) {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  const nlohmann::json j = {{"format_version", kFormatVersion},
                            {"node", node},
                            {"character", nlohmann::json::parse(character_to_json(chi))}};
  const fs::path target = path_for(d, node);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << j.dump() << '\n';
    if (!out.flush()) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace qtchar
