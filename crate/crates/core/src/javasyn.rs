//! In-process Java front end that mimics the error reporting of `javac`.
//!
//! It parses a pragmatic subset of Java (classes, interfaces, enums, generics,
//! lambdas, the usual statements and expressions) and then runs a light name
//! check. Like `javac`, a syntax error stops the run before any name checking,
//! and "expected" errors are reported at the end of the previous token.
//!
//! Only the first syntax error is reported; semantic errors are reported in
//! source order.

use std::collections::HashSet;

use crate::jlex::{self, Category};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckError {
    pub line: u32,
    pub col: u32,
    pub message: String,
    /// Continuation lines printed after the caret (e.g. `symbol:   class Foo`).
    pub details: Vec<String>,
}

const PRIMITIVES: &[&str] = &["boolean", "byte", "char", "short", "int", "long", "float", "double"];

const MODIFIERS: &[&str] = &[
    "public", "private", "protected", "static", "final", "abstract", "native", "synchronized",
    "transient", "volatile", "strictfp", "default",
];

const ASSIGN_OPS: &[&str] =
    &["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="];

/// Names always in scope (`java.lang`).
const JAVA_LANG: &[&str] = &[
    "String", "System", "Math", "Integer", "Double", "Float", "Long", "Short", "Byte", "Character",
    "Boolean", "Object", "StringBuilder", "StringBuffer", "Exception", "RuntimeException",
    "IllegalArgumentException", "IllegalStateException", "ArithmeticException",
    "NumberFormatException", "ArrayIndexOutOfBoundsException", "IndexOutOfBoundsException",
    "NullPointerException", "Thread", "Runnable", "Comparable", "Iterable", "Override",
    "Deprecated", "SuppressWarnings", "Error", "Throwable", "Number", "Enum", "Class",
    "CharSequence", "InterruptedException", "UnsupportedOperationException", "Void", "Record",
    "AutoCloseable", "Cloneable", "FunctionalInterface", "StringIndexOutOfBoundsException",
    "ClassCastException", "NegativeArraySizeException", "CloneNotSupportedException",
];

/// Classes importable from the packages students use most.
const KNOWN_PACKAGES: &[(&str, &[&str])] = &[
    (
        "java.util",
        &[
            "Scanner", "ArrayList", "List", "HashMap", "Map", "HashSet", "Set", "Arrays",
            "Collections", "Random", "LinkedList", "Iterator", "Queue", "Deque", "ArrayDeque",
            "Stack", "TreeMap", "TreeSet", "Objects", "Optional", "PriorityQueue", "Vector",
            "Comparator", "InputMismatchException", "NoSuchElementException", "LinkedHashMap",
            "LinkedHashSet", "Collection", "StringJoiner",
        ],
    ),
    (
        "java.io",
        &[
            "IOException", "BufferedReader", "InputStreamReader", "File", "FileReader",
            "PrintWriter", "FileNotFoundException", "FileWriter", "BufferedWriter", "PrintStream",
            "InputStream",
        ],
    ),
    ("java.text", &["DecimalFormat", "NumberFormat", "SimpleDateFormat"]),
    ("java.util.function", &["Function", "Predicate", "Supplier", "Consumer", "BiFunction"]),
];

#[derive(Debug, Clone)]
struct PTok {
    text: String,
    cat: Category,
    line: u32,
    col: u32,
    end_line: u32,
    /// Column just past the last character.
    end_col: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum UseKind {
    Type,
    Var,
    Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Ek {
    Assign,
    IncDec,
    Call,
    New,
    Lambda,
    Other,
}

impl Ek {
    fn is_statement(self) -> bool {
        matches!(self, Ek::Assign | Ek::IncDec | Ek::Call | Ek::New)
    }
}

struct MethodCtx {
    signature: String,
    scopes: Vec<HashSet<String>>,
}

type PResult<T> = Result<T, CheckError>;

struct Parser {
    toks: Vec<PTok>,
    pos: usize,
    declared: HashSet<String>,
    uses: Vec<(usize, String, UseKind)>,
    imports: HashSet<String>,
    bad_imports: Vec<(usize, String, String)>,
    class_stack: Vec<String>,
    top_public: Vec<(usize, String)>,
    methods: Vec<MethodCtx>,
    field_scopes: Vec<HashSet<String>>,
    semantic: Vec<(usize, CheckError)>,
}

/// Check `source` as if it were compiled from a file called `file_name`.
/// Returns no errors iff the program is accepted.
pub fn check(source: &str, file_name: &str) -> Vec<CheckError> {
    let stream = jlex::tokenize(source);
    let mut toks: Vec<PTok> = Vec::new();
    for t in stream.significant() {
        let mut end_line = t.line;
        let mut end_col = t.col;
        for c in t.text.chars() {
            if c == '\n' {
                end_line += 1;
                end_col = 1;
            } else {
                end_col += 1;
            }
        }
        toks.push(PTok {
            text: t.text.clone(),
            cat: t.category,
            line: t.line,
            col: t.col,
            end_line,
            end_col,
        });
    }
    let (eof_line, eof_col) = toks.last().map(|t| (t.line, t.col)).unwrap_or((1, 1));
    toks.push(PTok {
        text: String::new(),
        cat: Category::Other,
        line: eof_line,
        col: eof_col,
        end_line: eof_line,
        end_col: eof_col,
    });

    let mut p = Parser {
        toks,
        pos: 0,
        declared: HashSet::new(),
        uses: Vec::new(),
        imports: HashSet::new(),
        bad_imports: Vec::new(),
        class_stack: Vec::new(),
        top_public: Vec::new(),
        methods: Vec::new(),
        field_scopes: Vec::new(),
        semantic: Vec::new(),
    };
    if let Err(e) = p.compilation_unit() {
        return vec![e];
    }
    p.semantic_errors(file_name)
}

/// Format errors exactly as `javac` prints them on stderr.
pub fn render_javac(file: &str, source: &str, errors: &[CheckError]) -> String {
    let lines: Vec<&str> = source.split('\n').collect();
    let mut out = String::new();
    for e in errors {
        out.push_str(&format!("{file}:{}: error: {}\n", e.line, e.message));
        let text = lines.get(e.line as usize - 1).copied().unwrap_or("").trim_end_matches('\r');
        out.push_str(text);
        out.push('\n');
        let caret_pad: String = text
            .chars()
            .take(e.col.saturating_sub(1) as usize)
            .map(|c| if c == '\t' { '\t' } else { ' ' })
            .collect();
        out.push_str(&caret_pad);
        out.push_str("^\n");
        for d in &e.details {
            out.push_str(d);
            out.push('\n');
        }
    }
    if !errors.is_empty() {
        let n = errors.len();
        out.push_str(&format!("{n} error{}\n", if n == 1 { "" } else { "s" }));
    }
    out
}

fn lexical_problem(t: &PTok) -> Option<String> {
    match t.cat {
        Category::Literal if t.text.starts_with("\"\"\"") => {
            (t.text.len() < 6 || !t.text.ends_with("\"\"\"")).then(|| "unclosed text block".into())
        }
        Category::Literal if t.text.starts_with('"') => {
            (!closed(&t.text, '"')).then(|| "unclosed string literal".into())
        }
        Category::Literal if t.text.starts_with('\'') => {
            if t.text == "''" {
                Some("empty character literal".into())
            } else if !closed(&t.text, '\'') {
                Some("unclosed character literal".into())
            } else {
                None
            }
        }
        Category::Other if !t.text.is_empty() => Some(format!("illegal character: '{}'", t.text)),
        _ => None,
    }
}

fn closed(text: &str, quote: char) -> bool {
    let chars: Vec<char> = text.chars().collect();
    if chars.len() < 2 || *chars.last().unwrap() != quote {
        return false;
    }
    let mut backslashes = 0;
    for &c in chars[1..chars.len() - 1].iter().rev() {
        if c == '\\' {
            backslashes += 1;
        } else {
            break;
        }
    }
    backslashes % 2 == 0
}

impl Parser {
    // ---- token plumbing -------------------------------------------------

    fn tok(&self, k: usize) -> &PTok {
        let i = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[i]
    }

    fn at_eof(&self) -> bool {
        self.pos >= self.toks.len() - 1
    }

    fn is(&self, text: &str) -> bool {
        !self.at_eof() && self.tok(0).text == text
    }

    fn is_at(&self, k: usize, text: &str) -> bool {
        self.pos + k < self.toks.len() - 1 && self.tok(k).text == text
    }

    fn cat(&self, k: usize) -> Category {
        if self.pos + k >= self.toks.len() - 1 {
            Category::Other
        } else {
            self.tok(k).cat
        }
    }

    fn is_ident(&self) -> bool {
        self.cat(0) == Category::Identifier
    }

    fn bump(&mut self) -> PResult<usize> {
        if let Some(msg) = lexical_problem(self.tok(0)) {
            return Err(self.error_at(self.pos, msg));
        }
        let at = self.pos;
        if !self.at_eof() {
            self.pos += 1;
        }
        Ok(at)
    }

    fn eat(&mut self, text: &str) -> PResult<bool> {
        if self.is(text) {
            self.bump()?;
            Ok(true)
        } else {
            Ok(false)
        }
    }

    fn error_at(&self, idx: usize, msg: impl Into<String>) -> CheckError {
        let t = &self.toks[idx.min(self.toks.len() - 1)];
        CheckError { line: t.line, col: t.col, message: msg.into(), details: Vec::new() }
    }

    /// Error at the current token, unless it is lexically broken or the end
    /// of input, which take precedence as they do in `javac`.
    fn err_here(&self, msg: impl Into<String>) -> CheckError {
        if self.at_eof() {
            return self.eof_error();
        }
        if let Some(lex) = lexical_problem(self.tok(0)) {
            return self.error_at(self.pos, lex);
        }
        self.error_at(self.pos, msg)
    }

    fn eof_error(&self) -> CheckError {
        let t = self.toks.last().unwrap();
        CheckError {
            line: t.line,
            col: t.col,
            message: "reached end of file while parsing".into(),
            details: Vec::new(),
        }
    }

    fn expected(&self, what: &str) -> CheckError {
        if self.at_eof() {
            return self.eof_error();
        }
        if let Some(lex) = lexical_problem(self.tok(0)) {
            return self.error_at(self.pos, lex);
        }
        let (line, col) = if self.pos == 0 {
            (self.tok(0).line, self.tok(0).col)
        } else {
            let prev = &self.toks[self.pos - 1];
            (prev.end_line, prev.end_col)
        };
        CheckError { line, col, message: format!("{what} expected"), details: Vec::new() }
    }

    fn expect(&mut self, text: &str) -> PResult<()> {
        if self.eat(text)? {
            Ok(())
        } else {
            Err(self.expected(&format!("'{text}'")))
        }
    }

    fn ident(&mut self) -> PResult<String> {
        if self.is_ident() {
            let at = self.bump()?;
            Ok(self.toks[at].text.clone())
        } else {
            Err(self.expected("<identifier>"))
        }
    }

    fn declare(&mut self, name: &str) {
        self.declared.insert(name.to_string());
    }

    // ---- pure lookahead ----------------------------------------------------

    /// End index of a type starting at absolute index `p`, without consuming.
    fn scan_type(&self, mut p: usize) -> Option<usize> {
        let n = self.toks.len() - 1;
        let text = |i: usize| if i < n { self.toks[i].text.as_str() } else { "" };
        let cat = |i: usize| if i < n { self.toks[i].cat } else { Category::Other };
        if PRIMITIVES.contains(&text(p)) {
            p += 1;
        } else if cat(p) == Category::Identifier {
            p += 1;
            loop {
                if text(p) == "<" {
                    p = self.scan_type_args(p)?;
                }
                if text(p) == "." && cat(p + 1) == Category::Identifier {
                    p += 2;
                    continue;
                }
                break;
            }
        } else {
            return None;
        }
        while text(p) == "[" && text(p + 1) == "]" {
            p += 2;
        }
        Some(p)
    }

    fn scan_type_args(&self, mut p: usize) -> Option<usize> {
        let n = self.toks.len() - 1;
        let mut depth = 0i32;
        while p < n {
            let t = self.toks[p].text.as_str();
            match t {
                "<" => depth += 1,
                ">" => depth -= 1,
                ">>" => depth -= 2,
                ">>>" => depth -= 3,
                "," | "." | "?" | "[" | "]" | "&" | "extends" | "super" => {}
                _ if self.toks[p].cat == Category::Identifier || PRIMITIVES.contains(&t) => {}
                _ => return None,
            }
            p += 1;
            if depth <= 0 {
                return (depth == 0).then_some(p);
            }
        }
        None
    }

    fn matching_paren(&self, open: usize) -> Option<usize> {
        let n = self.toks.len() - 1;
        let mut depth = 0;
        for i in open..n {
            match self.toks[i].text.as_str() {
                "(" => depth += 1,
                ")" => {
                    depth -= 1;
                    if depth == 0 {
                        return Some(i);
                    }
                }
                ";" | "{" | "}" => return None,
                _ => {}
            }
        }
        None
    }

    /// Does a local variable declaration start here?
    fn looks_like_local_decl(&self) -> bool {
        let t = self.tok(0).text.as_str();
        if t == "final" || t == "@" {
            return true;
        }
        if PRIMITIVES.contains(&t) {
            return !self.is_at(1, ".") && !self.is_at(1, "[") || self.scan_type(self.pos).is_some_and(|e| e > self.pos + 1 && self.toks[e].cat == Category::Identifier);
        }
        if self.is_ident() {
            if let Some(end) = self.scan_type(self.pos) {
                return end < self.toks.len() - 1 && self.toks[end].cat == Category::Identifier;
            }
        }
        false
    }

    // ---- declarations ---------------------------------------------------

    fn compilation_unit(&mut self) -> PResult<()> {
        if self.is("package") {
            self.bump()?;
            self.qualified_name()?;
            self.expect(";")?;
        }
        while self.is("import") {
            self.import_decl()?;
        }
        while !self.at_eof() {
            if self.eat(";")? {
                continue;
            }
            let start = self.pos;
            let public = self.modifiers()?;
            if self.is("class") || self.is("interface") || self.is("enum") {
                if self.is("import") {
                    return Err(self.err_here("class, interface, enum, or record expected"));
                }
                let name = self.type_decl()?;
                if public {
                    self.top_public.push((start, name));
                }
            } else {
                return Err(self.err_here("class, interface, enum, or record expected"));
            }
        }
        Ok(())
    }

    fn qualified_name(&mut self) -> PResult<Vec<String>> {
        let mut parts = vec![self.ident()?];
        while self.is(".") && self.cat(1) == Category::Identifier {
            self.bump()?;
            parts.push(self.ident()?);
        }
        Ok(parts)
    }

    fn import_decl(&mut self) -> PResult<()> {
        self.bump()?;
        let is_static = self.eat("static")?;
        let start = self.pos;
        let mut parts = vec![self.ident()?];
        let mut wildcard = false;
        while self.eat(".")? {
            if self.eat("*")? {
                wildcard = true;
                break;
            }
            parts.push(self.ident()?);
        }
        self.expect(";")?;
        if is_static {
            if let Some(last) = parts.last() {
                self.imports.insert(last.clone());
            }
            return Ok(());
        }
        if wildcard {
            let pkg = parts.join(".");
            if let Some((_, names)) = KNOWN_PACKAGES.iter().find(|(p, _)| *p == pkg) {
                self.imports.extend(names.iter().map(|s| s.to_string()));
            }
        } else if parts.len() >= 2 {
            let name = parts.last().unwrap().clone();
            let pkg = parts[..parts.len() - 1].join(".");
            if let Some((_, names)) = KNOWN_PACKAGES.iter().find(|(p, _)| *p == pkg) {
                if !names.contains(&name.as_str()) {
                    let last_idx = start + 2 * (parts.len() - 1);
                    self.bad_imports.push((last_idx, name.clone(), pkg));
                }
            }
            self.imports.insert(name);
        }
        Ok(())
    }

    /// Returns whether `public` was among the modifiers.
    fn modifiers(&mut self) -> PResult<bool> {
        let mut public = false;
        loop {
            if self.is("@") && !self.is_at(1, "interface") {
                self.bump()?;
                self.qualified_name()?;
                if self.is("(") {
                    self.arguments()?;
                }
                continue;
            }
            let t = self.tok(0).text.clone();
            if MODIFIERS.contains(&t.as_str()) && !self.at_eof() {
                // `default:` inside a switch is not a modifier.
                if t == "default" && self.is_at(1, ":") {
                    break;
                }
                public |= t == "public";
                self.bump()?;
                continue;
            }
            break;
        }
        Ok(public)
    }

    fn type_decl(&mut self) -> PResult<String> {
        let kind = self.tok(0).text.clone();
        self.bump()?;
        let name = self.ident()?;
        self.declare(&name);
        if self.is("<") {
            self.type_params()?;
        }
        match kind.as_str() {
            "class" => {
                if self.eat("extends")? {
                    self.parse_type()?;
                }
                if self.eat("implements")? {
                    self.type_list()?;
                }
            }
            "interface" => {
                if self.eat("extends")? {
                    self.type_list()?;
                }
            }
            _ => {
                if self.eat("implements")? {
                    self.type_list()?;
                }
            }
        }
        self.class_stack.push(name.clone());
        if kind == "enum" {
            self.enum_body()?;
        } else {
            self.class_body()?;
        }
        self.class_stack.pop();
        Ok(name)
    }

    fn type_list(&mut self) -> PResult<()> {
        self.parse_type()?;
        while self.eat(",")? {
            self.parse_type()?;
        }
        Ok(())
    }

    fn type_params(&mut self) -> PResult<()> {
        self.expect("<")?;
        loop {
            let name = self.ident()?;
            self.declare(&name);
            if self.eat("extends")? {
                self.parse_type()?;
                while self.eat("&")? {
                    self.parse_type()?;
                }
            }
            if !self.eat(",")? {
                break;
            }
        }
        self.close_angle()
    }

    fn close_angle(&mut self) -> PResult<()> {
        if self.at_eof() {
            return Err(self.eof_error());
        }
        match self.tok(0).text.as_str() {
            ">" => {
                self.bump()?;
            }
            ">>" | ">>>" => {
                let t = &mut self.toks[self.pos];
                t.text.remove(0);
                t.col += 1;
            }
            _ => return Err(self.expected("'>'")),
        }
        Ok(())
    }

    fn enum_body(&mut self) -> PResult<()> {
        self.expect("{")?;
        self.field_scopes.push(HashSet::new());
        while self.is_ident() || self.is("@") {
            self.modifiers()?;
            let name = self.ident()?;
            self.declare(&name);
            if self.is("(") {
                self.arguments()?;
            }
            if self.is("{") {
                self.class_body()?;
            }
            if !self.eat(",")? {
                break;
            }
        }
        if self.eat(";")? {
            while !self.is("}") {
                if self.at_eof() {
                    return Err(self.eof_error());
                }
                self.member()?;
            }
        }
        self.field_scopes.pop();
        self.expect_close_brace()
    }

    fn expect_close_brace(&mut self) -> PResult<()> {
        if self.at_eof() {
            return Err(self.eof_error());
        }
        self.expect("}")
    }

    fn class_body(&mut self) -> PResult<()> {
        self.expect("{")?;
        self.field_scopes.push(HashSet::new());
        while !self.is("}") {
            if self.at_eof() {
                return Err(self.eof_error());
            }
            self.member()?;
        }
        self.field_scopes.pop();
        self.bump()?;
        Ok(())
    }

    fn member(&mut self) -> PResult<()> {
        if self.eat(";")? {
            return Ok(());
        }
        self.modifiers()?;
        if self.is("class") || self.is("interface") || self.is("enum") {
            self.type_decl()?;
            return Ok(());
        }
        if self.is("{") {
            self.methods.push(MethodCtx { signature: String::new(), scopes: vec![] });
            let r = self.block();
            self.methods.pop();
            return r;
        }
        if self.is("<") {
            self.type_params()?;
        }
        // constructor, or a method missing its return type
        if self.is_ident() && self.is_at(1, "(") {
            let at = self.pos;
            let name = self.ident()?;
            let is_ctor = self.class_stack.last() == Some(&name);
            if !is_ctor {
                return Err(self.error_at(at, "invalid method declaration; return type required"));
            }
            return self.method_rest(&name, "constructor");
        }
        let type_start = self.pos;
        if self.is("void") {
            self.bump()?;
        } else if self.scan_type(self.pos).is_some() {
            self.parse_type()?;
        } else {
            return Err(self.err_here("illegal start of type"));
        }
        let name = self.ident()?;
        if self.is("(") {
            self.declare(&name);
            return self.method_rest(&name, "method");
        }
        let _ = type_start;
        self.declare_field(&name);
        self.declarator_rest()?;
        while self.eat(",")? {
            let n = self.ident()?;
            self.declare_field(&n);
            self.declarator_rest()?;
        }
        self.expect(";")
    }

    fn declare_field(&mut self, name: &str) {
        let at = self.pos.saturating_sub(1);
        self.declare(name);
        let class = self.class_stack.last().cloned().unwrap_or_default();
        if let Some(scope) = self.field_scopes.last_mut() {
            if !scope.insert(name.to_string()) {
                let err = CheckError {
                    message: format!("variable {name} is already defined in class {class}"),
                    ..self.error_at(at, "")
                };
                self.semantic.push((at, err));
            }
        }
    }

    fn method_rest(&mut self, name: &str, kind: &str) -> PResult<()> {
        self.expect("(")?;
        let mut params: Vec<(String, String)> = Vec::new();
        if !self.is(")") {
            loop {
                self.modifiers()?;
                let ty_start = self.pos;
                self.parse_type()?;
                let mut ty = self.toks[ty_start..self.pos]
                    .iter()
                    .map(|t| t.text.as_str())
                    .collect::<String>();
                if self.eat("...")? {
                    ty.push_str("...");
                }
                let pname = self.ident()?;
                while self.is("[") && self.is_at(1, "]") {
                    self.bump()?;
                    self.bump()?;
                    ty.push_str("[]");
                }
                self.declare(&pname);
                params.push((ty, pname));
                if !self.eat(",")? {
                    break;
                }
            }
        }
        self.expect(")")?;
        while self.is("[") && self.is_at(1, "]") {
            self.bump()?;
            self.bump()?;
        }
        if self.eat("throws")? {
            self.type_list()?;
        }
        if self.is("{") {
            let sig = format!(
                "{kind} {name}({})",
                params.iter().map(|(t, _)| t.as_str()).collect::<Vec<_>>().join(",")
            );
            let scope: HashSet<String> = params.iter().map(|(_, n)| n.clone()).collect();
            self.methods.push(MethodCtx { signature: sig, scopes: vec![scope] });
            let r = self.block();
            self.methods.pop();
            r
        } else if self.eat(";")? {
            Ok(())
        } else {
            Err(self.expected("';'"))
        }
    }

    fn declarator_rest(&mut self) -> PResult<()> {
        while self.is("[") && self.is_at(1, "]") {
            self.bump()?;
            self.bump()?;
        }
        if self.eat("=")? {
            self.var_init()?;
        }
        Ok(())
    }

    fn var_init(&mut self) -> PResult<()> {
        if self.is("{") {
            self.array_init()
        } else {
            self.expr().map(|_| ())
        }
    }

    fn array_init(&mut self) -> PResult<()> {
        self.expect("{")?;
        while !self.is("}") {
            self.var_init()?;
            if !self.eat(",")? {
                break;
            }
        }
        self.expect("}")
    }

    fn parse_type(&mut self) -> PResult<()> {
        if self.at_eof() {
            return Err(self.eof_error());
        }
        let t = self.tok(0).text.clone();
        if PRIMITIVES.contains(&t.as_str()) {
            self.bump()?;
        } else if self.is_ident() {
            let at = self.pos;
            let first = self.ident()?;
            let mut qualified = false;
            loop {
                if self.is("<") {
                    self.type_args()?;
                }
                if self.is(".") && self.cat(1) == Category::Identifier {
                    self.bump()?;
                    self.ident()?;
                    qualified = true;
                    continue;
                }
                break;
            }
            if !qualified {
                self.uses.push((at, first, UseKind::Type));
            }
        } else {
            return Err(self.expected("<identifier>"));
        }
        while self.is("[") && self.is_at(1, "]") {
            self.bump()?;
            self.bump()?;
        }
        Ok(())
    }

    fn type_args(&mut self) -> PResult<()> {
        self.expect("<")?;
        if self.is(">") {
            return self.close_angle();
        }
        loop {
            if self.eat("?")? {
                if self.eat("extends")? || self.eat("super")? {
                    self.parse_type()?;
                }
            } else {
                self.parse_type()?;
            }
            if !self.eat(",")? {
                break;
            }
        }
        self.close_angle()
    }

    // ---- statements -----------------------------------------------------

    fn push_scope(&mut self) {
        if let Some(m) = self.methods.last_mut() {
            m.scopes.push(HashSet::new());
        }
    }

    fn pop_scope(&mut self) {
        if let Some(m) = self.methods.last_mut() {
            m.scopes.pop();
        }
    }

    fn declare_local(&mut self, name: &str, at: usize) {
        self.declare(name);
        let Some(m) = self.methods.last_mut() else { return };
        if m.signature.is_empty() {
            if let Some(s) = m.scopes.last_mut() {
                s.insert(name.to_string());
            }
            return;
        }
        if m.scopes.iter().any(|s| s.contains(name)) {
            let msg = format!("variable {name} is already defined in {}", m.signature);
            let err = CheckError { message: msg, ..self.error_at(at, "") };
            self.semantic.push((at, err));
        } else if let Some(s) = m.scopes.last_mut() {
            s.insert(name.to_string());
        }
    }

    fn block(&mut self) -> PResult<()> {
        self.expect("{")?;
        self.push_scope();
        while !self.is("}") {
            if self.at_eof() {
                return Err(self.eof_error());
            }
            self.block_statement()?;
        }
        self.pop_scope();
        self.bump()?;
        Ok(())
    }

    fn block_statement(&mut self) -> PResult<()> {
        if self.is("class") || self.is("interface") || self.is("enum") {
            self.type_decl()?;
            return Ok(());
        }
        if (self.is("abstract") || self.is("static")) && self.is_at(1, "class") {
            self.modifiers()?;
            self.type_decl()?;
            return Ok(());
        }
        if self.looks_like_local_decl() {
            self.local_var_decl()?;
            return self.expect(";");
        }
        self.statement()
    }

    fn local_var_decl(&mut self) -> PResult<()> {
        self.modifiers()?;
        self.parse_type()?;
        loop {
            let at = self.pos;
            let name = self.ident()?;
            self.declare_local(&name, at);
            self.declarator_rest()?;
            if !self.eat(",")? {
                break;
            }
        }
        Ok(())
    }

    fn statement(&mut self) -> PResult<()> {
        if self.at_eof() {
            return Err(self.eof_error());
        }
        let t = self.tok(0).text.clone();
        match t.as_str() {
            "{" => self.block(),
            ";" => {
                self.bump()?;
                Ok(())
            }
            "if" => {
                self.bump()?;
                self.par_expr()?;
                self.sub_statement()?;
                if self.eat("else")? {
                    self.sub_statement()?;
                }
                Ok(())
            }
            "while" => {
                self.bump()?;
                self.par_expr()?;
                self.sub_statement()
            }
            "do" => {
                self.bump()?;
                self.sub_statement()?;
                self.expect("while")?;
                self.par_expr()?;
                self.expect(";")
            }
            "for" => self.for_statement(),
            "switch" => self.switch_statement(),
            "return" => {
                self.bump()?;
                if !self.is(";") {
                    self.expr()?;
                }
                self.expect(";")
            }
            "break" | "continue" => {
                self.bump()?;
                if self.is_ident() {
                    self.bump()?;
                }
                self.expect(";")
            }
            "throw" => {
                self.bump()?;
                self.expr()?;
                self.expect(";")
            }
            "try" => self.try_statement(),
            "synchronized" => {
                self.bump()?;
                self.par_expr()?;
                self.block()
            }
            "assert" => {
                self.bump()?;
                self.expr()?;
                if self.eat(":")? {
                    self.expr()?;
                }
                self.expect(";")
            }
            "else" => Err(self.err_here("'else' without 'if'")),
            "case" | "default" => Err(self.err_here("orphaned ".to_string() + &t)),
            "catch" => Err(self.err_here("'catch' without 'try'")),
            "finally" => Err(self.err_here("'finally' without 'try'")),
            _ if self.is_ident() && self.is_at(1, ":") => {
                self.bump()?;
                self.bump()?;
                self.statement()
            }
            _ => {
                let at = self.pos;
                let kind = self.expr()?;
                if !kind.is_statement() {
                    return Err(self.error_at(at, "not a statement"));
                }
                self.expect(";")
            }
        }
    }

    /// Body of if/while/for/do: declarations are not allowed here.
    fn sub_statement(&mut self) -> PResult<()> {
        if !self.at_eof()
            && self.looks_like_local_decl()
            && !(self.is_ident() && self.is_at(1, ":"))
        {
            return Err(self.err_here("variable declaration not allowed here"));
        }
        if self.is("class") || self.is("interface") {
            return Err(self.err_here("class, interface or enum declaration not allowed here"));
        }
        self.statement()
    }

    fn par_expr(&mut self) -> PResult<()> {
        self.expect("(")?;
        self.expr()?;
        self.expect(")")
    }

    fn statement_expr_list(&mut self) -> PResult<()> {
        loop {
            let at = self.pos;
            if !self.expr()?.is_statement() {
                return Err(self.error_at(at, "not a statement"));
            }
            if !self.eat(",")? {
                return Ok(());
            }
        }
    }

    fn for_statement(&mut self) -> PResult<()> {
        self.bump()?;
        self.expect("(")?;
        self.push_scope();
        if self.looks_like_local_decl() {
            // enhanced for?
            let save = self.pos;
            self.modifiers()?;
            self.parse_type()?;
            if self.is_ident() && self.is_at(1, ":") {
                let at = self.pos;
                let name = self.ident()?;
                self.declare_local(&name, at);
                self.bump()?;
                self.expr()?;
                self.expect(")")?;
                self.sub_statement()?;
                self.pop_scope();
                return Ok(());
            }
            self.pos = save;
            self.local_var_decl()?;
        } else if !self.is(";") {
            self.statement_expr_list()?;
        }
        self.expect(";")?;
        if !self.is(";") {
            self.expr()?;
        }
        self.expect(";")?;
        if !self.is(")") {
            self.statement_expr_list()?;
        }
        self.expect(")")?;
        self.sub_statement()?;
        self.pop_scope();
        Ok(())
    }

    fn switch_statement(&mut self) -> PResult<()> {
        self.bump()?;
        self.par_expr()?;
        self.expect("{")?;
        self.push_scope();
        while !self.is("}") {
            if self.at_eof() {
                return Err(self.eof_error());
            }
            if self.eat("case")? {
                self.expr()?;
                while self.eat(",")? {
                    self.expr()?;
                }
                self.case_tail()?;
            } else if self.is("default") && (self.is_at(1, ":") || self.is_at(1, "->")) {
                self.bump()?;
                self.case_tail()?;
            } else {
                self.block_statement()?;
            }
        }
        self.pop_scope();
        self.bump()?;
        Ok(())
    }

    fn case_tail(&mut self) -> PResult<()> {
        if self.eat("->")? {
            if self.is("{") {
                return self.block();
            }
            if self.is("throw") {
                return self.statement();
            }
            self.expr()?;
            return self.expect(";");
        }
        if self.eat(":")? {
            Ok(())
        } else {
            Err(self.expected("':' or '->'"))
        }
    }

    fn try_statement(&mut self) -> PResult<()> {
        let at = self.bump()?;
        let mut resources = false;
        if self.eat("(")? {
            resources = true;
            self.push_scope();
            loop {
                self.local_var_decl()?;
                if !self.eat(";")? || self.is(")") {
                    break;
                }
            }
            self.expect(")")?;
        }
        self.block()?;
        let mut handlers = 0;
        while self.eat("catch")? {
            handlers += 1;
            self.expect("(")?;
            self.push_scope();
            self.modifiers()?;
            self.parse_type()?;
            while self.eat("|")? {
                self.parse_type()?;
            }
            let pat = self.pos;
            let name = self.ident()?;
            self.declare_local(&name, pat);
            self.expect(")")?;
            self.block()?;
            self.pop_scope();
        }
        if self.eat("finally")? {
            handlers += 1;
            self.block()?;
        }
        if resources {
            self.pop_scope();
        }
        if handlers == 0 && !resources {
            return Err(self.error_at(at, "'try' without 'catch', 'finally' or resource declarations"));
        }
        Ok(())
    }

    // ---- expressions ----------------------------------------------------

    fn expr(&mut self) -> PResult<Ek> {
        let lhs = self.ternary()?;
        if !self.at_eof() && ASSIGN_OPS.contains(&self.tok(0).text.as_str()) {
            self.bump()?;
            if self.is("{") {
                return Err(self.err_here("illegal start of expression"));
            }
            self.expr()?;
            return Ok(Ek::Assign);
        }
        Ok(lhs)
    }

    fn ternary(&mut self) -> PResult<Ek> {
        let k = self.binary(0)?;
        if self.eat("?")? {
            self.ternary_branch()?;
            if !self.eat(":")? {
                return Err(self.expected("':'"));
            }
            self.ternary_branch()?;
            return Ok(Ek::Other);
        }
        Ok(k)
    }

    fn ternary_branch(&mut self) -> PResult<()> {
        if self.is_lambda_start() {
            self.lambda()?;
        } else {
            self.ternary()?;
        }
        Ok(())
    }

    fn binary_level(op: &str) -> Option<usize> {
        Some(match op {
            "||" => 0,
            "&&" => 1,
            "|" => 2,
            "^" => 3,
            "&" => 4,
            "==" | "!=" => 5,
            "<" | ">" | "<=" | ">=" | "instanceof" => 6,
            "<<" | ">>" | ">>>" => 7,
            "+" | "-" => 8,
            "*" | "/" | "%" => 9,
            _ => return None,
        })
    }

    fn binary(&mut self, min: usize) -> PResult<Ek> {
        let mut kind = self.unary()?;
        loop {
            if self.at_eof() {
                break;
            }
            let op = self.tok(0).text.clone();
            let Some(level) = Self::binary_level(&op) else { break };
            if level < min {
                break;
            }
            self.bump()?;
            if op == "instanceof" {
                self.eat("final")?;
                self.parse_type()?;
                if self.is_ident() {
                    let at = self.pos;
                    let name = self.ident()?;
                    self.declare_local(&name, at);
                }
            } else {
                self.binary(level + 1)?;
            }
            kind = Ek::Other;
        }
        Ok(kind)
    }

    fn unary(&mut self) -> PResult<Ek> {
        if self.at_eof() {
            return Err(self.eof_error());
        }
        let t = self.tok(0).text.clone();
        match t.as_str() {
            "++" | "--" => {
                self.bump()?;
                self.unary()?;
                Ok(Ek::IncDec)
            }
            "+" | "-" | "!" | "~" => {
                self.bump()?;
                self.unary()?;
                Ok(Ek::Other)
            }
            "(" if self.is_cast() => {
                self.bump()?;
                self.parse_type()?;
                while self.eat("&")? {
                    self.parse_type()?;
                }
                self.expect(")")?;
                if self.is_lambda_start() {
                    self.lambda()?;
                } else {
                    self.unary()?;
                }
                Ok(Ek::Other)
            }
            _ => self.postfix(),
        }
    }

    fn is_cast(&self) -> bool {
        let p = self.pos + 1;
        let Some(end) = self.scan_type(p) else { return false };
        if end >= self.toks.len() - 1 || self.toks[end].text != ")" {
            return false;
        }
        let primitive = PRIMITIVES.contains(&self.toks[p].text.as_str());
        let next = &self.toks[end + 1];
        if end + 1 >= self.toks.len() - 1 {
            return false;
        }
        if primitive {
            return !matches!(next.text.as_str(), ")" | ";" | "," | "." | "]" | "}" | "=");
        }
        match next.cat {
            Category::Identifier | Category::Literal => true,
            Category::Keyword => matches!(next.text.as_str(), "this" | "super" | "new")
                || PRIMITIVES.contains(&next.text.as_str()),
            _ => matches!(next.text.as_str(), "(" | "!" | "~"),
        }
    }

    fn is_lambda_start(&self) -> bool {
        if self.is_ident() && self.is_at(1, "->") {
            return true;
        }
        if self.is("(") {
            if let Some(close) = self.matching_paren(self.pos) {
                return close + 1 < self.toks.len() - 1 && self.toks[close + 1].text == "->";
            }
        }
        false
    }

    fn lambda(&mut self) -> PResult<Ek> {
        if self.is_ident() {
            let name = self.ident()?;
            self.declare(&name);
        } else {
            self.expect("(")?;
            while !self.is(")") {
                if self.at_eof() {
                    return Err(self.eof_error());
                }
                if self.is_ident() && (self.is_at(1, ",") || self.is_at(1, ")")) {
                    let name = self.ident()?;
                    self.declare(&name);
                } else {
                    self.modifiers()?;
                    self.parse_type()?;
                    let name = self.ident()?;
                    self.declare(&name);
                }
                if !self.eat(",")? {
                    break;
                }
            }
            self.expect(")")?;
        }
        self.expect("->")?;
        if self.is("{") {
            self.methods.push(MethodCtx { signature: String::new(), scopes: vec![] });
            let r = self.block();
            self.methods.pop();
            r?;
        } else {
            self.expr()?;
        }
        Ok(Ek::Lambda)
    }

    fn postfix(&mut self) -> PResult<Ek> {
        let mut kind = self.primary()?;
        loop {
            if self.is(".") {
                self.bump()?;
                if self.is("new") {
                    self.creator()?;
                    kind = Ek::New;
                    continue;
                }
                if self.is("class") || self.is("this") || self.is("super") {
                    self.bump()?;
                    kind = Ek::Other;
                    continue;
                }
                if self.is("<") {
                    self.type_args()?;
                }
                self.ident()?;
                if self.is("(") {
                    self.arguments()?;
                    kind = Ek::Call;
                } else {
                    kind = Ek::Other;
                }
            } else if self.is("[") {
                self.bump()?;
                self.expr()?;
                self.expect("]")?;
                kind = Ek::Other;
            } else if self.is("::") {
                self.bump()?;
                if !self.eat("new")? {
                    self.ident()?;
                }
                kind = Ek::Other;
            } else if self.is("++") || self.is("--") {
                self.bump()?;
                kind = Ek::IncDec;
            } else {
                break;
            }
        }
        Ok(kind)
    }

    fn primary(&mut self) -> PResult<Ek> {
        if self.at_eof() {
            return Err(self.eof_error());
        }
        if self.is_lambda_start() {
            return self.lambda();
        }
        let t = self.tok(0).clone();
        match t.cat {
            Category::Literal => {
                self.bump()?;
                Ok(Ek::Other)
            }
            Category::Identifier => {
                let at = self.bump()?;
                if self.is("(") {
                    self.uses.push((at, t.text.clone(), UseKind::Method));
                    self.arguments()?;
                    Ok(Ek::Call)
                } else {
                    self.uses.push((at, t.text.clone(), UseKind::Var));
                    // array type in expression position, e.g. `String[].class`
                    if self.is("[") && self.is_at(1, "]") {
                        self.bump()?;
                        self.bump()?;
                        self.expect(".")?;
                        self.expect("class")?;
                    }
                    Ok(Ek::Other)
                }
            }
            Category::Keyword => match t.text.as_str() {
                "this" | "super" => {
                    self.bump()?;
                    if self.is("(") {
                        self.arguments()?;
                        return Ok(Ek::Call);
                    }
                    Ok(Ek::Other)
                }
                "new" => {
                    self.creator()?;
                    Ok(Ek::New)
                }
                "void" => {
                    self.bump()?;
                    self.expect(".")?;
                    self.expect("class")?;
                    Ok(Ek::Other)
                }
                p if PRIMITIVES.contains(&p) => {
                    self.bump()?;
                    while self.is("[") && self.is_at(1, "]") {
                        self.bump()?;
                        self.bump()?;
                    }
                    if self.eat(".")? {
                        if self.eat("class")? {
                            return Ok(Ek::Other);
                        }
                        return Err(self.err_here("class expected"));
                    }
                    Err(self.expected("'.class'"))
                }
                _ => Err(self.err_here("illegal start of expression")),
            },
            _ => {
                if t.text == "(" {
                    self.bump()?;
                    self.expr()?;
                    self.expect(")")?;
                    return Ok(Ek::Other);
                }
                Err(self.err_here("illegal start of expression"))
            }
        }
    }

    fn arguments(&mut self) -> PResult<()> {
        self.expect("(")?;
        if self.eat(")")? {
            return Ok(());
        }
        loop {
            self.expr()?;
            if !self.eat(",")? {
                break;
            }
        }
        self.expect(")")
    }

    fn creator(&mut self) -> PResult<()> {
        self.expect("new")?;
        if self.at_eof() {
            return Err(self.eof_error());
        }
        let t = self.tok(0).text.clone();
        if PRIMITIVES.contains(&t.as_str()) {
            self.bump()?;
        } else if self.is_ident() {
            let at = self.pos;
            let first = self.ident()?;
            let mut qualified = false;
            loop {
                if self.is("<") {
                    self.type_args()?;
                }
                if self.is(".") && self.cat(1) == Category::Identifier {
                    self.bump()?;
                    self.ident()?;
                    qualified = true;
                    continue;
                }
                break;
            }
            if !qualified {
                self.uses.push((at, first, UseKind::Type));
            }
            if self.is("(") {
                self.arguments()?;
                if self.is("{") {
                    self.methods.push(MethodCtx { signature: String::new(), scopes: vec![] });
                    let r = self.class_body();
                    self.methods.pop();
                    r?;
                }
                return Ok(());
            }
        } else {
            return Err(self.expected("<identifier>"));
        }
        if !self.is("[") {
            return Err(self.expected("'(' or '['"));
        }
        let mut sized = false;
        while self.is("[") {
            self.bump()?;
            if self.eat("]")? {
                continue;
            }
            if sized || !self.is("]") {
                self.expr()?;
                sized = true;
            }
            self.expect("]")?;
        }
        if self.is("{") {
            if sized {
                return Err(self.err_here("';' expected"));
            }
            self.array_init()?;
        } else if !sized {
            return Err(self.expected("array dimension missing"));
        }
        Ok(())
    }

    // ---- semantic pass ----------------------------------------------------

    fn semantic_errors(&mut self, file_name: &str) -> Vec<CheckError> {
        let mut errs: Vec<(usize, CheckError)> = std::mem::take(&mut self.semantic);
        let stem = file_name.strip_suffix(".java").unwrap_or(file_name);
        for (at, name) in &self.top_public {
            if name != stem {
                let idx = self.toks[*at..]
                    .iter()
                    .position(|t| &t.text == name)
                    .map(|k| at + k)
                    .unwrap_or(*at);
                let msg = format!("class {name} is public, should be declared in a file named {name}.java");
                errs.push((idx, self.error_at(idx, msg)));
            }
        }
        for (at, name, pkg) in &self.bad_imports {
            let mut e = self.error_at(*at, "cannot find symbol");
            e.details = vec![format!("  symbol:   class {name}"), format!("  location: package {pkg}")];
            errs.push((*at, e));
        }
        let location = self.class_stack.first().cloned().unwrap_or_else(|| {
            self.top_public.first().map(|(_, n)| n.clone()).unwrap_or_else(|| stem.to_string())
        });
        let mut reported: HashSet<(String, u8)> = HashSet::new();
        for (at, name, kind) in &self.uses {
            if self.declared.contains(name)
                || self.imports.contains(name)
                || JAVA_LANG.contains(&name.as_str())
            {
                continue;
            }
            // lower-case qualifiers such as `java.util.List` are package names
            if *kind == UseKind::Var
                && self.toks.get(at + 1).is_some_and(|t| t.text == ".")
                && name.chars().next().is_some_and(|c| c.is_lowercase())
                && matches!(name.as_str(), "java" | "javax")
            {
                continue;
            }
            let (sym, tag) = match kind {
                UseKind::Type => (format!("class {name}"), 0u8),
                UseKind::Var => (format!("variable {name}"), 1),
                UseKind::Method => (format!("method {name}"), 2),
            };
            let mut e = self.error_at(*at, "cannot find symbol");
            e.details = vec![format!("  symbol:   {sym}"), format!("  location: class {location}")];
            // javac reports every occurrence; one per name keeps output short
            if reported.insert((name.clone(), tag)) {
                errs.push((*at, e));
            }
        }
        errs.sort_by_key(|(at, e)| (*at, e.message.clone()));
        errs.into_iter().map(|(_, e)| e).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MULTIPLICATION: &str = "import java.util.Scanner; \npublic class Multiplication\n{\n\tpublic static void main(String[] args){\n\t\tScanner sc = new Scanner(System.in);\n\t\tint a = sc.nextInt();\n\t\tint b = sc.nextInt();\n\t\tint res = a x b;\n\t\tSystem.out.println(\"The result is: \" + res);\n\t}\n}\n";

    fn first(src: &str) -> Option<(u32, String)> {
        check(src, "Main.java").into_iter().next().map(|e| (e.line, e.message))
    }

    fn wrap(body: &str) -> String {
        format!("public class Main {{\n  public static void main(String[] args) {{\n{body}\n  }}\n}}\n")
    }

    #[test]
    fn multiplication_program_flags_line_eight() {
        let errs = check(MULTIPLICATION, "Multiplication.java");
        assert_eq!(errs.len(), 1);
        assert_eq!(errs[0].line, 8);
        assert_eq!(errs[0].message, "';' expected");
        let fixed = MULTIPLICATION.replace("a x b", "a * b");
        assert!(check(&fixed, "Multiplication.java").is_empty());
    }

    #[test]
    fn accepts_a_range_of_constructs() {
        let src = r#"
import java.util.*;
import java.io.IOException;

interface Shape { double area(); default String label() { return "shape"; } }

enum Color { RED, GREEN("g") { }, BLUE; Color() {} Color(String s) {} }

abstract class Base<T extends Comparable<T>> implements Shape {
    protected List<Map<String, List<Integer>>> data = new ArrayList<>();
    private int[] counts = {1, 2, 3}, other[];
    static int total;
    public abstract T pick();
    public double area() { return 0.0; }
}

public class Main {
    private static final int LIMIT = 10;
    Main() { this(3); }
    Main(int n) { super(); }

    @Override
    public String toString() { return "Main"; }

    static <T> void show(T value, String... rest) { System.out.println(value); }

    public static void main(String[] args) throws IOException {
        Scanner sc = new Scanner(System.in);
        int n = args.length > 0 ? Integer.parseInt(args[0]) : 5;
        double avg = (double) n / 2, x = -1e3;
        long big = 10L << 3 >>> 1;
        char c = 'a';
        String s = "x" + c + n;
        int[][] grid = new int[3][4];
        String[] names = new String[] {"a", "b"};
        List<Integer> xs = new ArrayList<Integer>();
        outer:
        for (int i = 0, j = 1; i < n; i++, j += 2) {
            for (String name : names) {
                if (name.equals("b")) continue outer; else break;
            }
            while (i < 0) i--;
            do { n--; } while (n > 100);
        }
        switch (n) {
            case 1: case 2:
                show(n);
                break;
            default:
                System.out.println("other");
        }
        try {
            n = 1 / 0;
        } catch (ArithmeticException | NullPointerException e) {
            System.out.println(e.getMessage());
        } finally {
            sc.close();
        }
        Runnable r = () -> System.out.println("run");
        Comparator<Integer> cmp = (a, b) -> a - b;
        xs.sort((a, b) -> { return b - a; });
        xs.forEach(System.out::println);
        Object o = s;
        if (o instanceof String && !s.isEmpty()) { grid[0][1] += ((String) o).length(); }
        boolean flag = n >= 2 && (n % 2 == 0 || n != 3);
        Color col = Color.RED;
        int[] copy = Arrays.copyOf(grid[0], 4);
        new Main().toString();
        Comparator<String> anon = new Comparator<String>() {
            public int compare(String p, String q) { return p.compareTo(q); }
        };
    }
}
"#;
        assert_eq!(check(src, "Main.java"), vec![]);
    }

    #[test]
    fn missing_semicolon_reported_on_previous_line() {
        let src = wrap("    int x = 5\n    int y = 6;");
        assert_eq!(first(&src), Some((3, "';' expected".into())));
    }

    #[test]
    fn classic_student_errors() {
        assert_eq!(first(&wrap("    x + 1;")).unwrap().1, "not a statement");
        assert_eq!(first(&wrap("    int x = (1 + 2;")).unwrap().1, "')' expected");
        assert_eq!(first(&wrap("    if (true) int q = 1;")).unwrap().1, "variable declaration not allowed here");
        assert_eq!(first(&wrap("    else { }")).unwrap().1, "'else' without 'if'");
        assert_eq!(first(&wrap("    int x = ;")).unwrap().1, "illegal start of expression");
        assert_eq!(first(&wrap("    String s = \"abc;")).unwrap().1, "unclosed string literal");
        assert_eq!(first(&wrap("    int # = 1;")).unwrap().1, "illegal character: '#'");
        assert_eq!(first(&wrap("    float n = float.parseInt(\"1\");")).unwrap().1, "class expected");
    }

    #[test]
    fn identifier_expected_for_missing_names() {
        let src = "public class Main {\n  public static void (String args[]) {\n  }\n}\n";
        assert_eq!(first(src), Some((2, "<identifier> expected".into())));
        let src = "public class Main {\n  public void takeItem(item) {\n  }\n}\n";
        assert_eq!(first(src), Some((2, "<identifier> expected".into())));
    }

    #[test]
    fn brace_errors() {
        let src = "public class Main {\n  void f() {\n    int x = 1;\n  }\n";
        assert_eq!(first(src).unwrap().1, "reached end of file while parsing");
        let src = "public class Main {\n  void f() {\n  }\n}\n}\n";
        assert_eq!(first(src), Some((5, "class, interface, enum, or record expected".into())));
    }

    #[test]
    fn name_errors() {
        let src = "public class Main {\n  public static void main(String[] args) {\n    Scanner sc = new Scanner(System.in);\n  }\n}\n";
        let e = check(src, "Main.java");
        assert_eq!(e[0].message, "cannot find symbol");
        assert_eq!(e[0].details[0], "  symbol:   class Scanner");
        let src = wrap("    int total = 0;\n    totl = 3;");
        let e = check(&src, "Main.java");
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].details[0], "  symbol:   variable totl");
        let src = "public class Other {\n}\n";
        assert_eq!(
            check(src, "Main.java")[0].message,
            "class Other is public, should be declared in a file named Other.java"
        );
    }

    #[test]
    fn duplicate_local_is_reported() {
        let src = wrap("    double bmr = 1;\n    double bmr = 2;");
        let e = check(&src, "Main.java");
        assert_eq!(e[0].message, "variable bmr is already defined in method main(String[])");
        assert_eq!(e[0].line, 4);
    }

    #[test]
    fn javac_rendering() {
        let errs = check(MULTIPLICATION, "Multiplication.java");
        let out = render_javac("Multiplication.java", MULTIPLICATION, &errs);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "Multiplication.java:8: error: ';' expected");
        assert_eq!(lines[1], "\t\tint res = a x b;");
        assert_eq!(lines[2], "\t\t           ^");
        assert_eq!(lines[3], "1 error");
    }

    #[test]
    fn empty_source_compiles_to_nothing() {
        assert!(check("", "Main.java").is_empty());
    }
}
