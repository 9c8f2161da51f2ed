#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include "etnc/errors.hpp"
#include "etnc/io.hpp"

namespace etnc {

CurveData fetch_metadata(const std::string& label, const std::string& endpoint) {
  // Split "scheme://host[:port]" from the path prefix.
  const auto scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos) throw NetworkError("endpoint must start with http:// or https://: " + endpoint);
  const auto path_start = endpoint.find('/', scheme_end + 3);
  const std::string origin = endpoint.substr(0, path_start);
  std::string prefix = path_start == std::string::npos ? "" : endpoint.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();

  httplib::Client client(origin);
  client.set_connection_timeout(5);
  client.set_read_timeout(10);
  const std::string path = prefix + "/curves/" + httplib::detail::encode_url(label);
  auto res = client.Get(path);
  if (!res) throw NetworkError("GET " + origin + path + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200) throw NetworkError("GET " + origin + path + " returned HTTP " + std::to_string(res->status));
  Json body;
  try {
    body = Json::parse(res->body);
  } catch (const nlohmann::json::parse_error& e) {
    throw NetworkError(std::string("metadata response is not JSON: ") + e.what());
  }
  try {
    return parse_curve(body, "fetched");
  } catch (const SchemaError& e) {
    throw NetworkError(std::string("metadata response rejected: ") + e.what());
  }
}

}  // namespace etnc
