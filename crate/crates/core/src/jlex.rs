//! Deterministic, total lexer for Java source.
//!
//! Every byte of the input ends up in exactly one token, so concatenating the
//! token texts reproduces the input. Whitespace and comments are kept as
//! tokens but are skipped by `index_in_line`, which is the position edits use.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Category {
    Keyword,
    Identifier,
    Literal,
    Operator,
    Delimiter,
    Comment,
    Whitespace,
    Other,
}

impl Category {
    pub fn is_trivia(self) -> bool {
        matches!(self, Category::Comment | Category::Whitespace)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Category::Keyword => "Keyword",
            Category::Identifier => "Identifier",
            Category::Literal => "Literal",
            Category::Operator => "Operator",
            Category::Delimiter => "Delimiter",
            Category::Comment => "Comment",
            Category::Whitespace => "Whitespace",
            Category::Other => "Other",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Reserved Java keywords. `true`, `false` and `null` are literals, and
/// contextual words such as `var` or `record` lex as identifiers.
pub const KEYWORDS: &[&str] = &[
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "final", "finally", "float",
    "for", "goto", "if", "implements", "import", "instanceof", "int", "interface", "long",
    "native", "new", "package", "private", "protected", "public", "return", "short", "static",
    "strictfp", "super", "switch", "synchronized", "this", "throw", "throws", "transient", "try",
    "void", "volatile", "while",
];

pub const DELIMITERS: &[&str] = &[";", ",", ".", "(", ")", "{", "}", "[", "]", "@", "::"];

// Longest first so that greedy matching picks `>>>=` over `>>`.
const OPERATORS: &[&str] = &[
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
    "-=", "*=", "/=", "&=", "|=", "^=", "%=", "<<", ">>", "=", ">", "<", "!", "~", "?", ":", "+",
    "-", "*", "/", "&", "|", "^", "%",
];

pub fn is_keyword(text: &str) -> bool {
    KEYWORDS.contains(&text)
}

pub fn is_delimiter(text: &str) -> bool {
    DELIMITERS.contains(&text)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub text: String,
    pub category: Category,
    /// 1-based line of the first character.
    pub line: u32,
    /// 1-based column (in chars) of the first character.
    pub col: u32,
    /// 1-based position among the significant tokens of the line; 0 for
    /// whitespace and comments.
    pub index_in_line: u32,
}

impl Token {
    pub fn is_trivia(&self) -> bool {
        self.category.is_trivia()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenStream {
    pub tokens: Vec<Token>,
    pub source: String,
    pub line_count: u32,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LexError {
    #[error("line {line} out of range (1..={line_count})")]
    OutOfRange { line: u32, line_count: u32 },
}

impl TokenStream {
    /// Significant (non-whitespace, non-comment) tokens in order.
    pub fn significant(&self) -> impl Iterator<Item = &Token> + '_ {
        self.tokens.iter().filter(|t| !t.is_trivia())
    }

    pub fn significant_count(&self) -> usize {
        self.significant().count()
    }

    pub fn line_tokens(&self, line_no: u32) -> Result<Vec<Token>, LexError> {
        line_tokens(self, line_no)
    }

    /// Byte offset of every token, parallel to `tokens`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.tokens.len());
        let mut at = 0;
        for t in &self.tokens {
            out.push(at);
            at += t.text.len();
        }
        out
    }
}

/// Lex raw bytes, replacing invalid UTF-8 with U+FFFD first.
pub fn tokenize_bytes(bytes: &[u8]) -> TokenStream {
    tokenize(&String::from_utf8_lossy(bytes))
}

pub fn tokenize(source: &str) -> TokenStream {
    let chars: Vec<char> = source.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    let mut line = 1u32;
    let mut col = 1u32;
    let mut index = 0u32;

    while i < chars.len() {
        let start = i;
        let category = scan(&chars, &mut i);
        let text: String = chars[start..i].iter().collect();
        let index_in_line = if category.is_trivia() {
            0
        } else {
            index += 1;
            index
        };
        tokens.push(Token { text, category, line, col, index_in_line });
        for &c in &chars[start..i] {
            if c == '\n' {
                line += 1;
                col = 1;
                index = 0;
            } else {
                col += 1;
            }
        }
    }

    let line_count = source.matches('\n').count() as u32 + 1;
    TokenStream { tokens, source: source.to_string(), line_count }
}

pub fn detokenize(stream: &TokenStream) -> String {
    stream.tokens.iter().map(|t| t.text.as_str()).collect()
}

/// Significant tokens that start on `line_no`. A token that begins on an
/// earlier line (e.g. a block comment) never counts.
pub fn line_tokens(stream: &TokenStream, line_no: u32) -> Result<Vec<Token>, LexError> {
    if line_no == 0 || line_no > stream.line_count {
        return Err(LexError::OutOfRange { line: line_no, line_count: stream.line_count });
    }
    Ok(stream
        .tokens
        .iter()
        .filter(|t| t.line == line_no && !t.is_trivia())
        .cloned()
        .collect())
}

/// Lex a single token text (e.g. an edit payload) and report its category.
/// Returns `None` unless the text is exactly one significant token.
pub fn single_token_category(text: &str) -> Option<Category> {
    let stream = tokenize(text);
    match stream.tokens.as_slice() {
        [t] if !t.is_trivia() && t.text == text => Some(t.category),
        _ => None,
    }
}

/// Category of a payload text, falling back to `Other` for texts that do not
/// form exactly one token.
pub fn category_of(text: &str) -> Category {
    single_token_category(text).unwrap_or(Category::Other)
}

/// Join token texts with single spaces. Used wherever an edited token line has
/// to be rendered back to text.
pub fn render_tokens<'a>(tokens: impl IntoIterator<Item = &'a Token>) -> String {
    let mut out = String::new();
    for t in tokens {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&t.text);
    }
    out
}

/// Texts of the significant tokens; the basis of token-level comparisons.
pub fn significant_texts(source: &str) -> Vec<String> {
    tokenize(source).significant().map(|t| t.text.clone()).collect()
}

fn is_java_ident_start(c: char) -> bool {
    c == '_' || c == '$' || c.is_alphabetic()
}

fn is_java_ident_part(c: char) -> bool {
    is_java_ident_start(c) || c.is_ascii_digit() || (c.is_alphanumeric() && !c.is_ascii())
}

fn scan(chars: &[char], i: &mut usize) -> Category {
    let c = chars[*i];
    let next = chars.get(*i + 1).copied();

    if c.is_whitespace() {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
        return Category::Whitespace;
    }

    if c == '/' && next == Some('/') {
        while *i < chars.len() && chars[*i] != '\n' {
            *i += 1;
        }
        return Category::Comment;
    }
    if c == '/' && next == Some('*') {
        *i += 2;
        while *i < chars.len() && !(chars[*i] == '*' && chars.get(*i + 1) == Some(&'/')) {
            *i += 1;
        }
        *i = (*i + 2).min(chars.len());
        return Category::Comment;
    }

    if c == '"' {
        if next == Some('"') && chars.get(*i + 2) == Some(&'"') {
            scan_text_block(chars, i);
        } else {
            scan_quoted(chars, i, '"');
        }
        return Category::Literal;
    }
    if c == '\'' {
        scan_quoted(chars, i, '\'');
        return Category::Literal;
    }

    if c.is_ascii_digit() || (c == '.' && next.is_some_and(|n| n.is_ascii_digit())) {
        scan_number(chars, i);
        return Category::Literal;
    }

    if is_java_ident_start(c) {
        let start = *i;
        while *i < chars.len() && is_java_ident_part(chars[*i]) {
            *i += 1;
        }
        let word: String = chars[start..*i].iter().collect();
        return if is_keyword(&word) {
            Category::Keyword
        } else if matches!(word.as_str(), "true" | "false" | "null") {
            Category::Literal
        } else {
            Category::Identifier
        };
    }

    if c == ':' && next == Some(':') {
        *i += 2;
        return Category::Delimiter;
    }
    if c == '.' && next == Some('.') && chars.get(*i + 2) == Some(&'.') {
        *i += 3;
        return Category::Operator;
    }
    if matches!(c, ';' | ',' | '.' | '(' | ')' | '{' | '}' | '[' | ']' | '@') {
        *i += 1;
        return Category::Delimiter;
    }
    for op in OPERATORS {
        if starts_with(chars, *i, op) {
            *i += op.chars().count();
            return Category::Operator;
        }
    }

    *i += 1;
    Category::Other
}

fn starts_with(chars: &[char], at: usize, pat: &str) -> bool {
    let mut k = at;
    for p in pat.chars() {
        if chars.get(k) != Some(&p) {
            return false;
        }
        k += 1;
    }
    true
}

/// String or char literal. Unterminated literals stop at end of line.
fn scan_quoted(chars: &[char], i: &mut usize, quote: char) {
    *i += 1;
    while *i < chars.len() {
        match chars[*i] {
            '\\' => {
                if chars.get(*i + 1).is_some_and(|&n| n != '\n') {
                    *i += 2;
                } else {
                    *i += 1;
                }
            }
            '\n' => return,
            c if c == quote => {
                *i += 1;
                return;
            }
            _ => *i += 1,
        }
    }
}

fn scan_text_block(chars: &[char], i: &mut usize) {
    *i += 3;
    while *i < chars.len() {
        if chars[*i] == '\\' {
            *i += 2;
            continue;
        }
        if starts_with(chars, *i, "\"\"\"") {
            *i += 3;
            return;
        }
        *i += 1;
    }
    *i = chars.len();
}

fn scan_number(chars: &[char], i: &mut usize) {
    let c = chars[*i];
    let next = chars.get(*i + 1).copied();
    if c == '0' && matches!(next, Some('x' | 'X' | 'b' | 'B')) {
        *i += 2;
        while *i < chars.len() && (chars[*i].is_ascii_hexdigit() || chars[*i] == '_') {
            *i += 1;
        }
    } else {
        let digits = |i: &mut usize| {
            while *i < chars.len() && (chars[*i].is_ascii_digit() || chars[*i] == '_') {
                *i += 1;
            }
        };
        digits(i);
        if *i < chars.len()
            && chars[*i] == '.'
            && chars.get(*i + 1).is_none_or(|n| n.is_ascii_digit() || !is_java_ident_start(*n))
            && chars.get(*i + 1) != Some(&'.')
        {
            *i += 1;
            digits(i);
        }
        if *i < chars.len() && matches!(chars[*i], 'e' | 'E') {
            let save = *i;
            *i += 1;
            if *i < chars.len() && matches!(chars[*i], '+' | '-') {
                *i += 1;
            }
            if *i < chars.len() && chars[*i].is_ascii_digit() {
                digits(i);
            } else {
                *i = save;
            }
        }
    }
    if *i < chars.len() && matches!(chars[*i], 'l' | 'L' | 'f' | 'F' | 'd' | 'D') {
        *i += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(src: &str) -> Vec<(String, Category)> {
        tokenize(src).significant().map(|t| (t.text.clone(), t.category)).collect()
    }

    #[test]
    fn lexes_the_multiplication_typo() {
        use Category::*;
        let got = sig("int res = a x b;");
        let want = [
            ("int", Keyword),
            ("res", Identifier),
            ("=", Operator),
            ("a", Identifier),
            ("x", Identifier),
            ("b", Identifier),
            (";", Delimiter),
        ];
        assert_eq!(got.len(), want.len());
        for ((t, c), (wt, wc)) in got.iter().zip(want) {
            assert_eq!((t.as_str(), *c), (wt, wc));
        }
        // whitespace is interleaved and kept
        assert_eq!(tokenize("int res = a x b;").tokens.len(), 12);
    }

    #[test]
    fn empty_input() {
        let s = tokenize("");
        assert!(s.tokens.is_empty());
        assert_eq!(s.line_count, 1);
        assert_eq!(detokenize(&s), "");
    }

    #[test]
    fn index_in_line_restarts_per_line() {
        let s = tokenize("a b /* c */ d\n  e // f\ng");
        let idx: Vec<(u32, u32, &str)> =
            s.significant().map(|t| (t.line, t.index_in_line, t.text.as_str())).collect();
        assert_eq!(idx, vec![(1, 1, "a"), (1, 2, "b"), (1, 3, "d"), (2, 1, "e"), (3, 1, "g")]);
    }

    #[test]
    fn unterminated_string_stops_at_newline() {
        let s = tokenize("x = \"abc;\ny;");
        let lits: Vec<_> = s.tokens.iter().filter(|t| t.category == Category::Literal).collect();
        assert_eq!(lits.len(), 1);
        assert_eq!(lits[0].text, "\"abc;");
        assert_eq!(detokenize(&s), "x = \"abc;\ny;");
    }

    #[test]
    fn comment_spanning_line_gives_empty_line() {
        let s = tokenize("a\n/* one\n two\n three */ b\n\n");
        assert!(line_tokens(&s, 2).unwrap().is_empty());
        assert!(line_tokens(&s, 3).unwrap().is_empty());
        assert_eq!(line_tokens(&s, 4).unwrap().len(), 1);
        assert!(line_tokens(&s, 5).unwrap().is_empty());
        assert_eq!(line_tokens(&s, 7), Err(LexError::OutOfRange { line: 7, line_count: 6 }));
    }

    #[test]
    fn operators_and_numbers() {
        let got: Vec<String> = sig("x >>>= 0x1F + 1.5e-3f - a.b ... :: List<List<X>> y; 1..2")
            .into_iter()
            .map(|(t, _)| t)
            .collect();
        assert_eq!(
            got,
            [
                "x", ">>>=", "0x1F", "+", "1.5e-3f", "-", "a", ".", "b", "...", "::", "List", "<",
                "List", "<", "X", ">>", "y", ";", "1", ".", ".2"
            ]
        );
    }

    #[test]
    fn invalid_utf8_is_replaced() {
        let s = tokenize_bytes(b"int \xff x;");
        assert!(s.source.contains('\u{FFFD}'));
        assert_eq!(detokenize(&s), s.source);
        assert!(s.tokens.iter().any(|t| t.category == Category::Other));
    }

    #[test]
    fn keyword_and_delimiter_sets_are_disjoint() {
        for k in KEYWORDS {
            assert!(!is_delimiter(k));
            assert_eq!(single_token_category(k), Some(Category::Keyword));
        }
        for d in DELIMITERS {
            assert_eq!(single_token_category(d), Some(Category::Delimiter), "{d}");
        }
    }

    #[test]
    fn render_joins_with_spaces() {
        let s = tokenize("a+b ;");
        assert_eq!(render_tokens(s.significant()), "a + b ;");
    }
}
