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


#include "gatedisc/kvfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "gatedisc/error.hpp"

namespace gatedisc {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, end);
}

KeyValueFile KeyValueFile::parse(std::string_view text) {
    KeyValueFile kv;
    int line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        if (key.empty()) {
            throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": empty key");
        }
        kv.set(key, std::string(trim(line.substr(eq + 1))));
    }
    return kv;
}

KeyValueFile KeyValueFile::load(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot read " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void KeyValueFile::save(const std::filesystem::path &path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::Io, "cannot write " + path.string());
    }
    out << to_string();
    if (!out) {
        throw Error(ErrorCode::Io, "write failed for " + path.string());
    }
}

std::string KeyValueFile::to_string() const {
    std::string out;
    size_t c = 0;
    for (size_t i = 0; i <= entries_.size(); ++i) {
        while (c < comments_.size() && comments_[c].first == i) {
            out += "# " + comments_[c].second + "\n";
            ++c;
        }
        if (i < entries_.size()) {
            out += entries_[i].first + " = " + entries_[i].second + "\n";
        }
    }
    return out;
}

void KeyValueFile::set(const std::string &key, const std::string &value) {
    for (auto &[k, v] : entries_) {
        if (k == key) {
            v = value;
            return;
        }
    }
    entries_.emplace_back(key, value);
}

void KeyValueFile::set(const std::string &key, double value) {
    set(key, format_number(value));
}

void KeyValueFile::set(const std::string &key, long long value) {
    set(key, std::to_string(value));
}

void KeyValueFile::add_comment(const std::string &text) {
    comments_.emplace_back(entries_.size(), text);
}

std::optional<std::string> KeyValueFile::find(const std::string &key) const {
    for (const auto &[k, v] : entries_) {
        if (k == key) {
            return v;
        }
    }
    return std::nullopt;
}

const std::string &KeyValueFile::get(const std::string &key) const {
    for (const auto &[k, v] : entries_) {
        if (k == key) {
            return v;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "missing key '" + key + "'");
}

double KeyValueFile::get_double(const std::string &key) const {
    const std::string &v = get(key);
    double out = 0;
    auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || end != v.data() + v.size()) {
        throw Error(ErrorCode::InvalidArgument, "key '" + key + "' is not a number: " + v);
    }
    return out;
}

double KeyValueFile::get_double(const std::string &key, double fallback) const {
    return find(key) ? get_double(key) : fallback;
}

long long KeyValueFile::get_int(const std::string &key) const {
    const std::string &v = get(key);
    long long out = 0;
    auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || end != v.data() + v.size()) {
        throw Error(ErrorCode::InvalidArgument, "key '" + key + "' is not an integer: " + v);
    }
    return out;
}

long long KeyValueFile::get_int(const std::string &key, long long fallback) const {
    return find(key) ? get_int(key) : fallback;
}

}  // namespace gatedisc
