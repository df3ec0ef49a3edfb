// Copyright 2026 The gretlite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "gretlite/schema.hpp"

namespace gretlite::io {

// Parses a .gls document. Declarations may refer to classes declared later
// in the file; multiplicities after edge endpoints are accepted and dropped.
std::shared_ptr<const Schema> load_schema(std::string_view text);

// Vertex classes first, then edge classes, each in definition order.
std::string save_schema(const Schema& schema);

}  // namespace gretlite::io
