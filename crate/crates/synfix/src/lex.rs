//! Token dump for `synfix lex`.

use std::fmt::Write as _;

use synfix_core::jlex;

/// Backslash-escape characters that would break a TSV field.
pub fn escape_field(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '\t' => out.push_str("\\t"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out
}

/// `line  col  category  text` for every token, whitespace and comments
/// included.
pub fn lex_tsv(source: &str) -> String {
    let mut out = String::new();
    for t in &jlex::tokenize(source).tokens {
        let _ = writeln!(out, "{}\t{}\t{}\t{}", t.line, t.col, t.category, escape_field(&t.text));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tabs_and_newlines_are_escaped() {
        assert_eq!(escape_field("a\tb\nc\\"), "a\\tb\\nc\\\\");
        let tsv = lex_tsv("int x;\n");
        let first = tsv.lines().next().unwrap();
        assert_eq!(first.split('\t').collect::<Vec<_>>(), ["1", "1", "Keyword", "int"]);
        assert!(tsv.lines().all(|l| l.split('\t').count() == 4));
    }
}
