#pragma once

#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "pitchside/common/client.hpp"

namespace pitchside::testing {

/// Answers through a callback and keeps every request it saw.
class ScriptedClient final : public Client {
 public:
  using Fn = std::function<std::string(const nlohmann::json&)>;
  explicit ScriptedClient(Fn fn) : fn_(std::move(fn)) {}

  std::string complete(const nlohmann::json& request) override {
    {
      std::lock_guard lock(mutex_);
      requests.push_back(request);
    }
    return fn_(request);
  }

  std::vector<nlohmann::json> requests;

 private:
  Fn fn_;
  std::mutex mutex_;
};

inline std::string task_of(const nlohmann::json& request) {
  return request.at("task").get<std::string>();
}

}  // namespace pitchside::testing
