//! Element-name lists, the textual form of ideals and element sets.
//!
//! A list is written `{a,b,c}` (braces optional when parsing). Element names
//! of product rings contain commas inside parentheses, so splitting only
//! happens on commas at nesting depth zero.

use alloc::string::String;
use alloc::vec::Vec;

/// Splits `s` on commas that are not nested in `()`, `[]` or `{}`.
/// Pieces are trimmed; empty input yields no pieces.
pub fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let tail = s[start..].trim();
    if !tail.is_empty() || !out.is_empty() {
        out.push(tail);
    }
    out
}

/// Strips one pair of enclosing braces, if present.
pub fn strip_braces(s: &str) -> &str {
    let t = s.trim();
    t.strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .unwrap_or(t)
}

pub fn render_list<'a, I: IntoIterator<Item = &'a str>>(names: I) -> String {
    let mut out = String::from("{");
    for (i, n) in names.into_iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(n);
    }
    out.push('}');
    out
}
