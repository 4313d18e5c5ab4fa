// Copyright 2026 The vlmgym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "vlmgym/harness/vlm_client.h"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "vlmgym/errors.h"
#include "vlmgym/png_io.h"

namespace vlmgym {
namespace {

struct ParsedUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

ParsedUrl SplitUrl(const std::string& url) {
  const std::size_t scheme = url.find("://");
  if (scheme == std::string::npos) {
    throw AgentFailure("endpoint URL has no scheme: " + url);
  }
  const std::size_t slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

// Spaces requests to one URL at least min_interval_ms apart.
void Throttle(const VlmEndpoint& endpoint) {
  if (endpoint.min_interval_ms <= 0) return;
  using Clock = std::chrono::steady_clock;
  static std::mutex mu;
  static std::map<std::string, Clock::time_point> next_slot;
  Clock::time_point slot;
  {
    std::lock_guard<std::mutex> lock(mu);
    const Clock::time_point now = Clock::now();
    auto [it, inserted] = next_slot.try_emplace(endpoint.url, now);
    slot = std::max(it->second, now);
    it->second = slot + std::chrono::milliseconds(endpoint.min_interval_ms);
  }
  std::this_thread::sleep_until(slot);
}

std::string DescribeHeaders(const httplib::Headers& headers) {
  std::string out;
  for (const auto& [k, v] : headers) {
    out += k + ": " + (k == "Authorization" ? "<redacted>" : v) + "\n";
  }
  return out;
}

std::string ExtractContent(const std::string& body) {
  const nlohmann::json reply = nlohmann::json::parse(body, nullptr, false);
  if (reply.is_discarded()) throw MalformedReply("reply is not JSON");
  const auto choices = reply.find("choices");
  if (choices == reply.end() || !choices->is_array() || choices->empty()) {
    throw MalformedReply("reply has no choices");
  }
  const nlohmann::json& message = (*choices)[0].value("message", nlohmann::json());
  const auto content = message.find("content");
  if (content == message.end()) throw MalformedReply("first choice has no content");
  if (content->is_string()) return content->get<std::string>();
  if (content->is_array()) {
    std::string text;
    for (const auto& part : *content) {
      if (part.value("type", "") == "text") text += part.value("text", "");
    }
    if (!text.empty()) return text;
  }
  throw MalformedReply("first choice has no text content");
}

}  // namespace

std::string Base64Encode(std::span<const std::uint8_t> bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3), '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                bytes.data(), static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::string BuildChatRequest(const VlmEndpoint& endpoint, std::string_view text,
                             std::span<const std::uint8_t> png) {
  nlohmann::ordered_json content = nlohmann::ordered_json::array();
  content.push_back({{"type", "text"}, {"text", std::string(text)}});
  if (!png.empty()) {
    content.push_back(
        {{"type", "image_url"},
         {"image_url",
          {{"url", "data:image/png;base64," + Base64Encode(png)}}}});
  }
  nlohmann::ordered_json body;
  body["model"] = endpoint.model;
  body["messages"] = {{{"role", "user"}, {"content", content}}};
  body["max_tokens"] = endpoint.max_tokens;
  body["temperature"] = endpoint.temperature;
  return body.dump();
}

std::string QueryVlm(const VlmEndpoint& endpoint, std::string_view text,
                     std::span<const std::uint8_t> png, const VlmLogFn& log) {
  if (endpoint.url.empty()) throw AgentFailure("endpoint URL not configured");
  const ParsedUrl url = SplitUrl(endpoint.url);
  httplib::Headers headers;
  if (!endpoint.api_key_env.empty()) {
    if (const char* key = std::getenv(endpoint.api_key_env.c_str())) {
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
  }
  const std::string body = BuildChatRequest(endpoint, text, png);

  httplib::Client client(url.origin);
  client.set_connection_timeout(endpoint.timeout_s);
  client.set_read_timeout(endpoint.timeout_s);
  client.set_write_timeout(endpoint.timeout_s);

  std::string last_error;
  int delay_ms = endpoint.backoff_ms;
  for (int attempt = 1; attempt <= endpoint.max_attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
      delay_ms *= 2;
    }
    Throttle(endpoint);
    if (log) log(VlmLogKind::Request, DescribeHeaders(headers) + "\n" + body);
    const httplib::Result res =
        client.Post(url.path, headers, body, "application/json");
    if (!res) {
      last_error = "connection error: " + httplib::to_string(res.error());
      if (log) log(VlmLogKind::Error, last_error);
      continue;
    }
    if (log) {
      log(VlmLogKind::Response,
          std::to_string(res->status) + "\n" + res->body);
    }
    if (res->status == 429 || res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status < 200 || res->status >= 300) {
      throw AgentFailure("HTTP " + std::to_string(res->status) + ": " +
                         res->body.substr(0, 200));
    }
    return ExtractContent(res->body);
  }
  throw AgentFailure("giving up after " + std::to_string(endpoint.max_attempts) +
                     " attempts: " + last_error);
}

std::string QueryVlm(const VlmEndpoint& endpoint, const PromptInstance& prompt,
                     const VlmLogFn& log) {
  std::vector<std::uint8_t> png;
  if (!prompt.image.pixels.empty()) png = EncodePng(prompt.image);
  return QueryVlm(endpoint, prompt.Text(), png, log);
}

}  // namespace vlmgym
