#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace httplib {
class Server;
}

namespace perfprof::service {

struct Response {
  int status = 200;
  std::string content_type;
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;

  std::string header(std::string_view name) const;
};

struct Asset {
  std::string content;
  std::string media_type;
};

/// Immutable table of UI files keyed by request path ("/index.html").
class StaticAssets {
 public:
  /// Placeholder page used when no UI bundle directory is given.
  static StaticAssets builtin();
  /// Loads every regular file below `root`. Throws std::runtime_error if
  /// `root` is not a directory.
  static StaticAssets from_directory(const std::filesystem::path& root);

  void add(std::string path, std::string content, std::string media_type);
  /// "/" resolves to "/index.html". Returns nullptr for unknown paths.
  const Asset* find(std::string_view path) const;
  std::size_t size() const { return assets_.size(); }

 private:
  std::map<std::string, Asset, std::less<>> assets_;
};

std::string media_type_for(std::string_view path);

struct Options {
  std::size_t max_body_bytes = std::size_t{32} << 20;
};

/// Stateless request handlers. Every handler is a pure function of its
/// arguments and the immutable asset table, so one instance may serve
/// concurrent requests.
class Service {
 public:
  explicit Service(Options options = {}, StaticAssets assets = StaticAssets::builtin());

  /// POST /api/profile. Body: {"dataset": {...}, "config": {...},
  /// "format": "json"|"svg"|"html", "title": "..."}.
  Response handle_profile(std::string_view body) const;
  /// GET /api/schema, honouring If-None-Match against a strong ETag.
  Response handle_schema(std::string_view if_none_match = {}) const;
  /// GET for anything else.
  Response serve_static(std::string_view path) const;

  /// Registers all routes on `server` and sets its payload limit.
  void mount(httplib::Server& server) const;

  const Options& options() const { return options_; }
  const std::string& schema_etag() const { return schema_etag_; }

 private:
  Options options_;
  StaticAssets assets_;
  std::string schema_etag_;
};

}  // namespace perfprof::service
