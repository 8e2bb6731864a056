// Copyright 2026 The gatedisc Authors
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


// Line-oriented `key = value` documents used for configs, noise models, fit
// targets and experiment reports. Blank lines and lines starting with '#'
// are ignored; key order is preserved.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gatedisc {

class KeyValueFile {
   public:
    static KeyValueFile parse(std::string_view text);
    static KeyValueFile load(const std::filesystem::path &path);

    void save(const std::filesystem::path &path) const;
    std::string to_string() const;

    /// Replaces an existing key in place, otherwise appends.
    void set(const std::string &key, const std::string &value);
    void set(const std::string &key, double value);
    void set(const std::string &key, long long value);
    void add_comment(const std::string &text);

    std::optional<std::string> find(const std::string &key) const;
    const std::string &get(const std::string &key) const;
    double get_double(const std::string &key) const;
    double get_double(const std::string &key, double fallback) const;
    long long get_int(const std::string &key) const;
    long long get_int(const std::string &key, long long fallback) const;

    const std::vector<std::pair<std::string, std::string>> &entries() const {
        return entries_;
    }

   private:
    std::vector<std::pair<std::string, std::string>> entries_;
    std::vector<std::pair<size_t, std::string>> comments_;  // position, text
};

/// Shortest decimal that reads back to the same double.
std::string format_number(double value);

}  // namespace gatedisc
