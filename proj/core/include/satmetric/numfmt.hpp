/*
 * Copyright 2026 The satmetric Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace satmetric {

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

std::optional<long long> parse_integer(std::string_view text);

// Accepts a plain decimal ("39.69512195") or an exact ratio ("3255/82").
std::optional<double> parse_real(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace satmetric
