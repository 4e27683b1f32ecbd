#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"
#include "pitchside/common/client.hpp"
#include "pitchside/common/error.hpp"

namespace pitchside {

using nlohmann::json;

HttpClient::HttpClient(std::string endpoint, int timeout_s) : timeout_s_(timeout_s) {
  const auto scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos)
    fail(ErrorKind::InvalidInput, "endpoint must start with http:// or https://");
  const auto scheme = endpoint.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https")
    fail(ErrorKind::InvalidInput, "unsupported endpoint scheme '" + scheme + "'");
  const auto path_start = endpoint.find('/', scheme_end + 3);
  origin_ = endpoint.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : endpoint.substr(path_start);
}

std::string HttpClient::complete(const json& request) {
  httplib::Client cli(origin_);
  cli.set_connection_timeout(timeout_s_);
  cli.set_read_timeout(timeout_s_);
  const json body = {{"digest", request_digest(request)}, {"request", request}};
  auto res = cli.Post(path_, body.dump(), "application/json");
  if (!res)
    fail(ErrorKind::ClientError, "endpoint unreachable: " + httplib::to_string(res.error()));
  if (res->status < 200 || res->status >= 300)
    fail(ErrorKind::ClientError, "endpoint returned HTTP " + std::to_string(res->status));
  const auto parsed = json::parse(res->body, nullptr, false);
  if (parsed.is_object()) {
    auto it = parsed.find("text");
    if (it == parsed.end() || !it->is_string())
      fail(ErrorKind::ClientError, "endpoint reply lacks a string 'text' field");
    return it->get<std::string>();
  }
  return res->body;
}

}  // namespace pitchside
