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

#ifndef VLMGYM_PNG_IO_H_
#define VLMGYM_PNG_IO_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "vlmgym/render.h"

namespace vlmgym {

// 8-bit RGB, non-interlaced.
std::vector<std::uint8_t> EncodePng(const ObservationImage& image);
void WritePng(const ObservationImage& image, const std::filesystem::path& path);

// Any PNG libpng understands, converted to 8-bit RGB. content_hash is filled
// in. Throws std::runtime_error on unreadable input.
ObservationImage ReadPng(const std::filesystem::path& path);

}  // namespace vlmgym

#endif  // VLMGYM_PNG_IO_H_
