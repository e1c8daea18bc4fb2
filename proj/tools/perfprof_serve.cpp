#include <csignal>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "httplib.h"
#include "perfprof/service.hpp"

namespace {
httplib::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HTTP service for performance profile computation"};
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string assets_dir;
  std::size_t max_body = std::size_t{32} << 20;
  app.add_option("--host", host, "Bind address")->envname("PERFPROF_HOST");
  app.add_option("--port", port, "Bind port")->envname("PERFPROF_PORT");
  app.add_option("--assets", assets_dir, "Directory holding the web UI bundle")
      ->envname("PERFPROF_ASSETS");
  app.add_option("--max-body", max_body, "Maximum request body in bytes");
  CLI11_PARSE(app, argc, argv);

  perfprof::service::Options options;
  options.max_body_bytes = max_body;
  auto assets = perfprof::service::StaticAssets::builtin();
  if (!assets_dir.empty()) {
    try {
      assets = perfprof::service::StaticAssets::from_directory(assets_dir);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
  }
  perfprof::service::Service service(options, std::move(assets));

  httplib::Server server;
  service.mount(server);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  std::cerr << "listening on http://" << host << ":" << port << '\n';
  if (!server.listen(host, port)) {
    std::cerr << "error: cannot bind " << host << ":" << port << '\n';
    return 1;
  }
  return 0;
}
