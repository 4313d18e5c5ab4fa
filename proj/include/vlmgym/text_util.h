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

#ifndef VLMGYM_TEXT_UTIL_H_
#define VLMGYM_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace vlmgym {

bool IsSpace(char c);
std::string_view Trim(std::string_view s);
std::string ToLower(std::string_view s);

// Trim, collapse every whitespace run (newlines included) into one space,
// and ASCII case-fold. This is the equality used for perception scoring.
std::string NormalizeText(std::string_view s);

// Same as NormalizeText but keeps line structure: each line is trimmed and
// collapsed on its own, and empty lines are kept.
std::vector<std::string> NormalizeLines(std::string_view s);

}  // namespace vlmgym

#endif  // VLMGYM_TEXT_UTIL_H_
