#include "perfprof/service.hpp"

#include <cstdint>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include "httplib.h"
#include "perfprof/config_io.hpp"
#include "perfprof/curve_json.hpp"
#include "perfprof/format.hpp"
#include "perfprof/json_util.hpp"
#include "perfprof/render.hpp"

namespace perfprof::service {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kJson = "application/json";

Response json_response(int status, const Json& body) {
  return {status, std::string(kJson), body.dump(2) + "\n", {}};
}

Response error_response(int status, std::string_view message) {
  return json_response(status, Json{{"error", message}});
}

Response report_response(const ValidationReport& report) {
  return json_response(422, report_to_json(report));
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k, h >>= 4) out[static_cast<std::size_t>(k)] = digits[h & 0xf];
  return out;
}

constexpr std::string_view kPlaceholderPage = R"html(<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8"/>
<title>perfprof</title>
</head>
<body>
<h1>perfprof service</h1>
<p>No UI bundle is installed. Start the server with <code>--assets DIR</code>
to serve the interactive workbench.</p>
<ul>
<li><code>GET /api/schema</code>: JSON Schema of the results format</li>
<li><code>POST /api/profile</code>: compute profiles as JSON, SVG or HTML</li>
</ul>
</body>
</html>
)html";

}  // namespace

std::string Response::header(std::string_view name) const {
  for (const auto& [k, v] : headers)
    if (k == name) return v;
  return {};
}

std::string media_type_for(std::string_view path) {
  auto dot = path.rfind('.');
  auto ext = dot == std::string_view::npos ? std::string_view{} : path.substr(dot + 1);
  if (ext == "html" || ext == "htm") return "text/html; charset=utf-8";
  if (ext == "js" || ext == "mjs") return "text/javascript; charset=utf-8";
  if (ext == "css") return "text/css; charset=utf-8";
  if (ext == "json" || ext == "map") return "application/json";
  if (ext == "svg") return "image/svg+xml";
  if (ext == "png") return "image/png";
  if (ext == "ico") return "image/x-icon";
  if (ext == "wasm") return "application/wasm";
  if (ext == "woff2") return "font/woff2";
  if (ext == "txt") return "text/plain; charset=utf-8";
  return "application/octet-stream";
}

StaticAssets StaticAssets::builtin() {
  StaticAssets assets;
  assets.add("/index.html", std::string(kPlaceholderPage), media_type_for(".html"));
  return assets;
}

StaticAssets StaticAssets::from_directory(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root))
    throw std::runtime_error("asset directory '" + root.string() + "' not found");
  StaticAssets assets;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::string content(std::istreambuf_iterator<char>(in), {});
    auto key = "/" + fs::relative(entry.path(), root).generic_string();
    assets.add(key, std::move(content), media_type_for(key));
  }
  return assets;
}

void StaticAssets::add(std::string path, std::string content, std::string media_type) {
  assets_[std::move(path)] = Asset{std::move(content), std::move(media_type)};
}

const Asset* StaticAssets::find(std::string_view path) const {
  if (path == "/") path = "/index.html";
  auto it = assets_.find(path);
  return it == assets_.end() ? nullptr : &it->second;
}

Service::Service(Options options, StaticAssets assets)
    : options_(options),
      assets_(std::move(assets)),
      schema_etag_("\"" + fnv1a_hex(dataset_schema()) + "\"") {}

Response Service::handle_profile(std::string_view body) const {
  if (body.size() > options_.max_body_bytes)
    return error_response(413, "payload exceeds " +
                                   std::to_string(options_.max_body_bytes) + " bytes");

  ValidationReport duplicates;
  std::string syntax_error;
  auto request = parse_json_strict(body, duplicates, syntax_error);
  if (!request) return error_response(400, "malformed JSON: " + syntax_error);
  if (!request->is_object()) return error_response(400, "request body must be an object");
  if (!duplicates.ok()) return report_response(duplicates);

  ValidationReport report;
  for (const auto& [key, _] : request->items())
    if (key != "dataset" && key != "config" && key != "format" && key != "title")
      report.error(key, "unknown request field");

  std::string format = "json";
  if (request->contains("format")) {
    const auto& f = (*request)["format"];
    if (!f.is_string() || (f != "json" && f != "svg" && f != "html"))
      report.error("format", "expected 'json', 'svg' or 'html'");
    else
      format = f.get<std::string>();
  }
  std::string title;
  if (request->contains("title")) {
    if (!(*request)["title"].is_string())
      report.error("title", "expected a string");
    else
      title = (*request)["title"].get<std::string>();
  }

  if (!request->contains("dataset")) {
    report.error("dataset", "missing required field");
    return report_response(report);
  }
  auto parsed = parse_dataset_json((*request)["dataset"]);
  report.merge(parsed.report, "dataset");
  if (!parsed.dataset) return report_response(report);

  static const Json kNoConfig;
  const auto& config_node =
      request->contains("config") ? (*request)["config"] : kNoConfig;
  auto resolved = config_from_json(*parsed.dataset, config_node);
  report.merge(resolved.report, "config");
  if (!report.ok()) return report_response(report);

  const auto profiles = analyze(*parsed.dataset, resolved.config);
  Response response;
  response.headers = {
      {"X-Profile-Denominator", std::to_string(profiles.denominator)},
      {"X-Profile-Excluded-No-Baseline", std::to_string(profiles.excluded_no_baseline)},
      {"X-Profile-Max-Ratio",
       profiles.max_ratio ? format_exact(*profiles.max_ratio) : std::string("none")},
  };
  if (format == "json") {
    response.content_type = std::string(kJson);
    response.body = curves_document(profiles);
    return response;
  }
  try {
    response.body = render_svg(profiles, resolved.config);
  } catch (const RenderError& e) {
    report.error("config", std::string(e.what()) + ": every instance was filtered out");
    return report_response(report);
  }
  if (format == "html") {
    response.body = render_html(response.body, title);
    response.content_type = "text/html; charset=utf-8";
  } else {
    response.content_type = "image/svg+xml";
  }
  return response;
}

Response Service::handle_schema(std::string_view if_none_match) const {
  Response response;
  response.headers = {{"ETag", schema_etag_}, {"Cache-Control", "public, max-age=3600"}};
  if (!if_none_match.empty() &&
      (if_none_match == "*" || if_none_match.find(schema_etag_) != std::string_view::npos)) {
    response.status = 304;
    return response;
  }
  response.content_type = "application/schema+json";
  response.body = std::string(dataset_schema());
  return response;
}

Response Service::serve_static(std::string_view path) const {
  const Asset* asset = assets_.find(path);
  if (!asset) return error_response(404, "not found");
  return {200, asset->media_type, asset->content, {}};
}

void Service::mount(httplib::Server& server) const {
  auto send = [](const Response& r, httplib::Response& res) {
    res.status = r.status;
    for (const auto& [k, v] : r.headers) res.set_header(k, v);
    if (r.status != 304) res.set_content(r.body, r.content_type);
  };

  server.set_payload_max_length(options_.max_body_bytes);
  server.Post("/api/profile", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(handle_profile(req.body), res);
  });
  server.Get("/api/schema", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(handle_schema(req.get_header_value("If-None-Match")), res);
  });
  server.Get(".*", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(serve_static(req.path), res);
  });
}

}  // namespace perfprof::service
