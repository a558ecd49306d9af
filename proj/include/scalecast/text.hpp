#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace scalecast {

/// Tokenizer shared by Rouge-L and memory retrieval.
///
/// Text is decoded as UTF-8, split on Unicode White_Space, lowercased
/// (ASCII, Latin-1, Greek and basic Cyrillic letters), and stripped of
/// punctuation code points. Tokens left empty after stripping are dropped.
/// Invalid UTF-8 bytes are treated as U+FFFD.
std::vector<std::string> tokenize(std::string_view text);

std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);
bool is_unicode_space(char32_t c);
bool is_unicode_punct(char32_t c);

std::string_view trim(std::string_view s);
std::vector<std::string_view> split_lines(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

using SlotMap = std::map<std::string, std::string, std::less<>>;

/// Substitutes `{{name}}` slots. Unknown slots raise kSchemaViolation so a
/// typo in an edited template fails loudly instead of leaking braces.
std::string render_slots(std::string_view tmpl, const SlotMap& slots);

/// Python `str.format` semantics restricted to named fields: `{name}` is
/// replaced, `{{` and `}}` become literal braces.
std::string format_fields(std::string_view tmpl, const SlotMap& fields);

std::string sha256_hex(std::string_view data);

/// First 8 bytes of SHA-256 over the parts joined with U+001F, as an integer.
std::uint64_t derive_seed(const std::vector<std::string>& parts);

}  // namespace scalecast
