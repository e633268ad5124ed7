// Copyright 2026 The ballid Authors
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

#ifndef BALLID_FORMAT_HPP_
#define BALLID_FORMAT_HPP_

// Small text helpers shared by the CSV readers and writers.

#include <string>
#include <string_view>
#include <vector>

namespace ballid {

// Shortest representation that parses back to the same double.
std::string format_double(double v);

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

// Throws InvalidInput naming `what` on malformed or trailing characters.
double parse_double(std::string_view s, std::string_view what);
long long parse_int(std::string_view s, std::string_view what);

// "a;b;c" -> {a, b, c}; empty string -> {}.
std::vector<double> parse_double_list(std::string_view s, char sep,
                                      std::string_view what);
std::string format_double_list(const std::vector<double>& v, char sep);

}  // namespace ballid

#endif  // BALLID_FORMAT_HPP_
