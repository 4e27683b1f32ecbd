#include "pitchside/common/client.hpp"

#include <cstdlib>
#include <mutex>

#include "pitchside/common/digest.hpp"
#include "pitchside/common/error.hpp"
#include "pitchside/common/files.hpp"

namespace pitchside {

using nlohmann::json;

std::string canonical_request(const json& request) { return request.dump(); }

std::string request_digest(const json& request) { return sha256_hex(canonical_request(request)); }

RecordedStore RecordedStore::from_json(const json& doc) {
  if (!doc.is_object()) fail(ErrorKind::ParseError, "recorded store must be a JSON object");
  RecordedStore store;
  for (const auto& [digest, response] : doc.items()) {
    if (!response.is_string())
      fail(ErrorKind::ParseError, "recorded response for " + digest + " must be a string");
    store.entries_.emplace(digest, response.get<std::string>());
  }
  return store;
}

RecordedStore RecordedStore::load(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return {};
  return from_json(read_json_file(path));
}

RecordedStore::RecordedStore(RecordedStore&& other) noexcept {
  std::unique_lock lock(other.mutex_);
  entries_ = std::move(other.entries_);
}

RecordedStore& RecordedStore::operator=(RecordedStore&& other) noexcept {
  if (this != &other) {
    std::scoped_lock lock(mutex_, other.mutex_);
    entries_ = std::move(other.entries_);
  }
  return *this;
}

std::optional<std::string> RecordedStore::get(const std::string& digest) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(digest);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void RecordedStore::put(const std::string& digest, const std::string& response) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(digest, response);
  if (!inserted && it->second != response)
    fail(ErrorKind::DigestCollision, "digest " + digest + " already maps to a different response");
}

std::size_t RecordedStore::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

json RecordedStore::to_json() const {
  std::shared_lock lock(mutex_);
  json out = json::object();
  for (const auto& [digest, response] : entries_) out[digest] = response;
  return out;
}

void RecordedStore::save(const std::filesystem::path& path) const {
  write_text_file(path, to_json().dump(2) + "\n");
}

std::string RecordedClient::complete(const json& request) {
  const auto digest = request_digest(request);
  auto hit = store_.get(digest);
  if (!hit) fail(ErrorKind::ClientError, "no recorded response for request " + digest);
  return *hit;
}

std::string RecordingClient::complete(const json& request) {
  const auto digest = request_digest(request);
  if (auto hit = store_.get(digest)) return *hit;
  auto response = live_.complete(request);
  store_.put(digest, response);
  return response;
}

std::optional<std::string> resolve_endpoint(const std::optional<std::string>& flag) {
  if (const char* env = std::getenv(kEndpointEnv); env != nullptr && *env != '\0')
    return std::string(env);
  if (flag && !flag->empty()) return flag;
  return std::nullopt;
}

}  // namespace pitchside
