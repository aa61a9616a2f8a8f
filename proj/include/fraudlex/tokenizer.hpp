#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fraudlex {

struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;

    bool operator==(const Span&) const = default;
};

/// Lowercased tokens plus the byte range each one occupies in the source text.
struct TokenStream {
    std::vector<std::string> tokens;
    std::vector<Span> spans;

    std::size_t size() const noexcept { return tokens.size(); }
    bool empty() const noexcept { return tokens.empty(); }
};

namespace detail {

struct Utf8Char {
    char32_t cp;
    std::size_t length;
};

inline Utf8Char decode_utf8(std::string_view s, std::size_t pos) {
    const auto b0 = static_cast<unsigned char>(s[pos]);
    auto cont = [&](std::size_t i) -> int {
        if (pos + i >= s.size()) return -1;
        const auto b = static_cast<unsigned char>(s[pos + i]);
        return (b & 0xC0) == 0x80 ? (b & 0x3F) : -1;
    };
    if (b0 < 0x80) return {b0, 1};
    if ((b0 & 0xE0) == 0xC0) {
        const int c1 = cont(1);
        if (c1 >= 0 && b0 >= 0xC2) return {char32_t((b0 & 0x1F) << 6 | c1), 2};
    } else if ((b0 & 0xF0) == 0xE0) {
        const int c1 = cont(1), c2 = cont(2);
        if (c1 >= 0 && c2 >= 0) {
            const char32_t cp = (b0 & 0x0F) << 12 | c1 << 6 | c2;
            if (cp >= 0x800 && (cp < 0xD800 || cp > 0xDFFF)) return {cp, 3};
        }
    } else if ((b0 & 0xF8) == 0xF0) {
        const int c1 = cont(1), c2 = cont(2), c3 = cont(3);
        if (c1 >= 0 && c2 >= 0 && c3 >= 0) {
            const char32_t cp = (b0 & 0x07) << 18 | c1 << 12 | c2 << 6 | c3;
            if (cp >= 0x10000 && cp <= 0x10FFFF) return {cp, 4};
        }
    }
    return {0xFFFD, 1}; // invalid byte, treated as a separator
}

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline bool is_space(char32_t c) {
    return c == ' ' || (c >= 0x09 && c <= 0x0D) || c == 0x85 || c == 0xA0 || c == 0x1680 ||
           (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029 || c == 0x202F || c == 0x205F ||
           c == 0x3000;
}

inline bool is_apostrophe(char32_t c) { return c == U'\'' || c == 0x2019 || c == 0x2018 || c == 0x02BC; }
inline bool is_hyphen(char32_t c) { return c == U'-' || c == 0x2010 || c == 0x2011; }

inline bool is_punctuation(char32_t c) {
    if (c < 0x80) return !(c >= '0' && c <= '9') && !(c >= 'a' && c <= 'z') && !(c >= 'A' && c <= 'Z') && c > 0x20 && c != 0x7F;
    return (c >= 0xA1 && c <= 0xBF) || c == 0xD7 || c == 0xF7 || (c >= 0x2010 && c <= 0x2027) ||
           (c >= 0x2030 && c <= 0x205E) || (c >= 0x2E00 && c <= 0x2E7F) || (c >= 0x3001 && c <= 0x303F) ||
           (c >= 0xFE10 && c <= 0xFE6F) || (c >= 0xFF01 && c <= 0xFF0F) || (c >= 0xFF1A && c <= 0xFF20) ||
           c == 0xFFFD;
}

inline bool is_control(char32_t c) { return c < 0x20 || c == 0x7F || (c >= 0x80 && c < 0xA0); }

inline bool is_word_char(char32_t c) { return !is_space(c) && !is_punctuation(c) && !is_control(c); }

inline char32_t to_lower(char32_t c) {
    if (c >= 'A' && c <= 'Z') return c + 32;
    if ((c >= 0xC0 && c <= 0xDE && c != 0xD7)) return c + 32;           // Latin-1
    if (c >= 0x0410 && c <= 0x042F) return c + 32;                      // Cyrillic
    if (c >= 0x0391 && c <= 0x03A9 && c != 0x03A2) return c + 32;       // Greek
    return c;
}

} // namespace detail

/// Splits text into lowercase word tokens.
///
/// Punctuation separates tokens, except an apostrophe or hyphen that sits between
/// two word characters, which stays inside the token ("can't", "follow-up").
/// Typographic apostrophes and hyphens are folded to their ASCII forms.
inline TokenStream tokenize(std::string_view text) {
    TokenStream out;
    std::string current;
    std::size_t start = 0, last_end = 0;
    bool in_token = false;

    auto flush = [&] {
        if (in_token) {
            out.tokens.push_back(std::move(current));
            out.spans.push_back({start, last_end});
            current.clear();
            in_token = false;
        }
    };

    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto ch = detail::decode_utf8(text, pos);
        const std::size_t next = pos + ch.length;
        if (detail::is_word_char(ch.cp)) {
            if (!in_token) {
                in_token = true;
                start = pos;
            }
            detail::append_utf8(current, detail::to_lower(ch.cp));
            last_end = next;
        } else if (in_token && (detail::is_apostrophe(ch.cp) || detail::is_hyphen(ch.cp)) && next < text.size() &&
                   detail::is_word_char(detail::decode_utf8(text, next).cp)) {
            current.push_back(detail::is_apostrophe(ch.cp) ? '\'' : '-');
            last_end = next;
        } else {
            flush();
        }
        pos = next;
    }
    flush();
    return out;
}

/// Tokens only, for lexicon phrases and tests.
inline std::vector<std::string> tokenize_words(std::string_view text) { return tokenize(text).tokens; }

} // namespace fraudlex
