#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

#include "json.hpp"

namespace pitchside {

/// Text-in, text-out boundary around every model the system consults.
/// A request is a JSON object; the response is the model's raw text.
class Client {
 public:
  virtual ~Client() = default;
  virtual std::string complete(const nlohmann::json& request) = 0;
};

/// Sorted-key compact serialization; identical requests give identical bytes.
std::string canonical_request(const nlohmann::json& request);
/// Hex SHA-256 of the canonical request.
std::string request_digest(const nlohmann::json& request);

/// Digest -> response map persisted as a flat JSON object. Safe for concurrent
/// readers and writers. Writes are append-only: storing a different response
/// under an existing digest throws DigestCollision.
class RecordedStore {
 public:
  RecordedStore() = default;
  static RecordedStore from_json(const nlohmann::json& doc);
  /// Missing file yields an empty store.
  static RecordedStore load(const std::filesystem::path& path);

  std::optional<std::string> get(const std::string& digest) const;
  void put(const std::string& digest, const std::string& response);
  std::size_t size() const;

  nlohmann::json to_json() const;
  void save(const std::filesystem::path& path) const;

  RecordedStore(RecordedStore&& other) noexcept;
  RecordedStore& operator=(RecordedStore&& other) noexcept;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::string> entries_;
};

/// Answers only from the store; a missing digest is a ClientError.
class RecordedClient final : public Client {
 public:
  explicit RecordedClient(const RecordedStore& store) : store_(store) {}
  std::string complete(const nlohmann::json& request) override;

 private:
  const RecordedStore& store_;
};

/// Serves stored responses and forwards misses to `live`, recording the result.
class RecordingClient final : public Client {
 public:
  RecordingClient(Client& live, RecordedStore& store) : live_(live), store_(store) {}
  std::string complete(const nlohmann::json& request) override;

 private:
  Client& live_;
  RecordedStore& store_;
};

/// POSTs {"digest", "request"} to an HTTP(S) endpoint. The reply is either a
/// JSON object with a string "text" field or plain text.
class HttpClient final : public Client {
 public:
  explicit HttpClient(std::string endpoint, int timeout_s = 120);
  std::string complete(const nlohmann::json& request) override;

 private:
  std::string origin_;
  std::string path_;
  int timeout_s_;
};

/// Environment variable naming the model endpoint.
inline constexpr const char* kEndpointEnv = "PITCHSIDE_ENDPOINT";

/// The environment variable when set and non-empty, else the explicit value.
std::optional<std::string> resolve_endpoint(const std::optional<std::string>& flag);

}  // namespace pitchside
