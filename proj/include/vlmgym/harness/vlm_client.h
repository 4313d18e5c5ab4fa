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


#ifndef VLMGYM_HARNESS_VLM_CLIENT_H_
#define VLMGYM_HARNESS_VLM_CLIENT_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "vlmgym/protocol.h"

namespace vlmgym {

// An OpenAI-style chat-completions endpoint.
struct VlmEndpoint {
  std::string url;  // e.g. https://host/v1/chat/completions
  std::string model;
  std::string api_key_env = "VLMGYM_API_KEY";  // empty: no Authorization
  int max_attempts = 3;
  int backoff_ms = 1000;  // doubled after every failed attempt
  int timeout_s = 120;
  int max_tokens = 2048;
  double temperature = 0.0;
  // Minimum spacing between requests to this URL across all threads.
  int min_interval_ms = 0;
};

enum class VlmLogKind { Request, Response, Error };

// Receives each request and response body plus headers, with the
// Authorization value already redacted. Must be thread-safe.
using VlmLogFn = std::function<void(VlmLogKind, std::string_view)>;

std::string Base64Encode(std::span<const std::uint8_t> bytes);

// Chat-completions body: one user message holding the text part and, when
// png is non-empty, an image_url part with a base64 data URI.
std::string BuildChatRequest(const VlmEndpoint& endpoint, std::string_view text,
                             std::span<const std::uint8_t> png);

// Sends the request and returns choices[0].message.content. Connection
// errors, 429 and 5xx are retried with exponential backoff. Throws
// AgentFailure once attempts are exhausted or on other HTTP errors, and
// MalformedReply when the reply carries no text.
std::string QueryVlm(const VlmEndpoint& endpoint, std::string_view text,
                     std::span<const std::uint8_t> png,
                     const VlmLogFn& log = nullptr);

// Prompt text plus its PNG-encoded image.
std::string QueryVlm(const VlmEndpoint& endpoint, const PromptInstance& prompt,
                     const VlmLogFn& log = nullptr);

}  // namespace vlmgym

#endif  // VLMGYM_HARNESS_VLM_CLIENT_H_
