//! Compiler driving and `javac` error-stream parsing.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use regex::Regex;
use thiserror::Error;

use crate::javasyn;
use crate::jlex::{self, Category};

pub const JAVAC_ENV: &str = "SYNFIX_JAVAC";
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(10);

const BUILTIN_PATTERNS: &str = include_str!("../data/unfixable.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Fixability {
    SourceEditable,
    EnvironmentBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub file: PathBuf,
    pub line: u32,
    pub col: Option<u32>,
    /// Headline followed by any detail lines (`symbol: ...`), newline-joined.
    pub message: String,
    /// Every stderr line belonging to this diagnostic.
    pub raw: String,
    pub fixability: Fixability,
}

impl Diagnostic {
    /// First line of the message, the part fed to the models.
    pub fn headline(&self) -> &str {
        self.message.lines().next().unwrap_or("")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompileResult {
    pub success: bool,
    pub diagnostics: Vec<Diagnostic>,
    pub duration_ms: u64,
}

#[derive(Debug, Error)]
pub enum CompileError {
    #[error("compiler unavailable: {0}")]
    CompilerUnavailable(String),
    #[error("compiler timed out after {0:?}")]
    Timeout(Duration),
    #[error("bad unfixable pattern `{pattern}`: {source}")]
    Pattern { pattern: String, source: regex::Error },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Regexes marking messages that no source edit can fix.
#[derive(Debug, Clone)]
pub struct PatternTable {
    patterns: Vec<Regex>,
}

impl PatternTable {
    pub fn parse(text: &str) -> Result<Self, CompileError> {
        let mut patterns = Vec::new();
        for line in text.lines() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let re = Regex::new(line).map_err(|source| CompileError::Pattern { pattern: line.to_string(), source })?;
            patterns.push(re);
        }
        Ok(PatternTable { patterns })
    }

    pub fn builtin() -> &'static PatternTable {
        static TABLE: OnceLock<PatternTable> = OnceLock::new();
        TABLE.get_or_init(|| PatternTable::parse(BUILTIN_PATTERNS).expect("builtin pattern table is valid"))
    }

    /// The builtin table plus the patterns in `path`.
    pub fn with_extra_file(path: &Path) -> Result<Self, CompileError> {
        let extra = PatternTable::parse(&std::fs::read_to_string(path)?)?;
        let mut t = PatternTable::builtin().clone();
        t.patterns.extend(extra.patterns);
        Ok(t)
    }

    pub fn classify(&self, message: &str) -> Fixability {
        if self.patterns.iter().any(|re| re.is_match(message)) {
            Fixability::EnvironmentBound
        } else {
            Fixability::SourceEditable
        }
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
}

pub fn classify(d: &Diagnostic) -> Fixability {
    PatternTable::builtin().classify(&d.message)
}

/// First source-editable diagnostic, in emission order.
pub fn select_target(diags: &[Diagnostic]) -> Option<&Diagnostic> {
    diags.iter().find(|d| d.fixability == Fixability::SourceEditable)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParsedOutput {
    pub diagnostics: Vec<Diagnostic>,
    /// Lines seen before the first diagnostic header.
    pub preamble: Vec<String>,
}

fn header_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^(.+?):(\d+): error: (.*)$").unwrap())
}

fn summary_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^\d+ errors?$").unwrap())
}

/// Parse `javac` stderr. Every line ends up either in a diagnostic's `raw`
/// text or in the preamble.
pub fn parse_javac_output(stderr: &str, table: &PatternTable) -> ParsedOutput {
    struct Partial {
        file: PathBuf,
        line: u32,
        col: Option<u32>,
        message: String,
        raw: Vec<String>,
        after_header: usize,
        in_details: bool,
    }
    let finish = |p: Partial| Diagnostic {
        fixability: table.classify(&p.message),
        file: p.file,
        line: p.line.max(1),
        col: p.col,
        message: p.message,
        raw: p.raw.join("\n"),
    };
    let mut out = ParsedOutput::default();
    let mut cur: Option<Partial> = None;
    for line in stderr.lines() {
        let line = line.trim_end_matches('\r');
        if let Some(c) = header_re().captures(line) {
            if let Some(p) = cur.take() {
                out.diagnostics.push(finish(p));
            }
            cur = Some(Partial {
                file: PathBuf::from(&c[1]),
                line: c[2].parse().unwrap_or(1),
                col: None,
                message: c[3].to_string(),
                raw: vec![line.to_string()],
                after_header: 0,
                in_details: false,
            });
            continue;
        }
        let Some(p) = cur.as_mut() else {
            out.preamble.push(line.to_string());
            continue;
        };
        p.raw.push(line.to_string());
        p.after_header += 1;
        if summary_re().is_match(line) {
            continue;
        }
        let trimmed = line.trim_start();
        if p.col.is_none() && trimmed == "^" && p.after_header <= 2 {
            p.col = Some(line.chars().count() as u32);
            p.in_details = true;
        } else if p.in_details {
            p.message.push('\n');
            p.message.push_str(line);
        }
    }
    if let Some(p) = cur {
        out.diagnostics.push(finish(p));
    }
    out
}

/// Name of the first top-level `public` type, used as the file name.
pub fn public_class_name(source: &str) -> Option<String> {
    let stream = jlex::tokenize(source);
    let sig: Vec<&jlex::Token> = stream.significant().collect();
    let mut public = false;
    for (i, t) in sig.iter().enumerate() {
        match (t.category, t.text.as_str()) {
            (Category::Keyword, "public") => public = true,
            (Category::Keyword, "class" | "interface" | "enum") => {
                if public {
                    return sig.get(i + 1).filter(|n| n.category == Category::Identifier).map(|n| n.text.clone());
                }
            }
            (Category::Keyword, "abstract" | "final" | "static" | "strictfp") => {}
            (Category::Delimiter, "@") => {}
            _ => public = false,
        }
    }
    None
}

pub fn source_file_name(source: &str) -> String {
    format!("{}.java", public_class_name(source).unwrap_or_else(|| "Main".to_string()))
}

/// Something that compiles a single Java source file.
pub trait Compiler: Send + Sync {
    fn compile(&self, source: &str) -> Result<CompileResult, CompileError>;

    fn name(&self) -> &str;
}

fn finish_result(stderr: &str, exit_ok: bool, table: &PatternTable, start: Instant) -> CompileResult {
    let mut parsed = parse_javac_output(stderr, table);
    if !exit_ok && parsed.diagnostics.is_empty() {
        let message = if parsed.preamble.is_empty() {
            "compiler exited with status failure".to_string()
        } else {
            parsed.preamble.join("\n")
        };
        parsed.diagnostics.push(Diagnostic {
            file: PathBuf::new(),
            line: 1,
            col: None,
            fixability: Fixability::EnvironmentBound,
            raw: message.clone(),
            message,
        });
    }
    CompileResult {
        success: parsed.diagnostics.is_empty(),
        diagnostics: parsed.diagnostics,
        duration_ms: start.elapsed().as_millis() as u64,
    }
}

/// The in-process front end, producing `javac`-formatted output.
#[derive(Debug, Clone)]
pub struct BuiltinCompiler {
    table: PatternTable,
}

impl Default for BuiltinCompiler {
    fn default() -> Self {
        BuiltinCompiler { table: PatternTable::builtin().clone() }
    }
}

impl BuiltinCompiler {
    pub fn with_patterns(table: PatternTable) -> Self {
        BuiltinCompiler { table }
    }

    /// The exact text `javac` would print for `source`.
    pub fn stderr_for(source: &str, file_name: &str) -> String {
        let errors = javasyn::check(source, file_name);
        javasyn::render_javac(file_name, source, &errors)
    }
}

impl Compiler for BuiltinCompiler {
    fn compile(&self, source: &str) -> Result<CompileResult, CompileError> {
        let start = Instant::now();
        let file = source_file_name(source);
        let stderr = Self::stderr_for(source, &file);
        Ok(finish_result(&stderr, stderr.is_empty(), &self.table, start))
    }

    fn name(&self) -> &str {
        "builtin"
    }
}

/// An external `javac`-compatible binary run as a subprocess.
#[derive(Debug, Clone)]
pub struct JavacCompiler {
    pub binary: PathBuf,
    pub timeout: Duration,
    pub table: PatternTable,
    /// Parent of the per-call working directories (system temp by default).
    pub temp_root: Option<PathBuf>,
}

impl JavacCompiler {
    pub fn new(binary: impl Into<PathBuf>) -> Self {
        JavacCompiler {
            binary: binary.into(),
            timeout: DEFAULT_TIMEOUT,
            table: PatternTable::builtin().clone(),
            temp_root: None,
        }
    }

    /// Uses `SYNFIX_JAVAC` if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(JAVAC_ENV).filter(|v| !v.is_empty()).map(Self::new)
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = timeout;
        self
    }
}

impl Compiler for JavacCompiler {
    fn compile(&self, source: &str) -> Result<CompileResult, CompileError> {
        let start = Instant::now();
        let dir = match &self.temp_root {
            Some(root) => tempfile::Builder::new().prefix("synfix-").tempdir_in(root)?,
            None => tempfile::Builder::new().prefix("synfix-").tempdir()?,
        };
        let file = source_file_name(source);
        std::fs::write(dir.path().join(&file), source)?;
        let mut child = Command::new(&self.binary)
            .arg("-nowarn")
            .arg("-d")
            .arg(dir.path())
            .arg(&file)
            .current_dir(dir.path())
            .stdin(Stdio::null())
            .stdout(Stdio::null())
            .stderr(Stdio::piped())
            .spawn()
            .map_err(|e| CompileError::CompilerUnavailable(format!("{}: {e}", self.binary.display())))?;
        let mut pipe = child.stderr.take().expect("stderr is piped");
        let reader = std::thread::spawn(move || {
            let mut buf = Vec::new();
            let _ = pipe.read_to_end(&mut buf);
            buf
        });
        let deadline = start + self.timeout;
        let status = loop {
            if let Some(status) = child.try_wait()? {
                break status;
            }
            if Instant::now() >= deadline {
                let _ = child.kill();
                let _ = child.wait();
                return Err(CompileError::Timeout(self.timeout));
            }
            std::thread::sleep(Duration::from_millis(2));
        };
        let stderr = String::from_utf8_lossy(&reader.join().unwrap_or_default()).into_owned();
        Ok(finish_result(&stderr, status.success(), &self.table, start))
    }

    fn name(&self) -> &str {
        "javac"
    }
}

/// `SYNFIX_JAVAC` if configured, otherwise the builtin front end.
pub fn default_compiler() -> Box<dyn Compiler> {
    match JavacCompiler::from_env() {
        Some(c) => Box::new(c),
        None => Box::new(BuiltinCompiler::default()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(message: &str) -> Diagnostic {
        Diagnostic {
            file: "Main.java".into(),
            line: 1,
            col: None,
            message: message.into(),
            raw: message.into(),
            fixability: PatternTable::builtin().classify(message),
        }
    }

    #[test]
    fn classification() {
        assert_eq!(
            classify(&diag("class Foo is public, should be declared in a file named Foo.java")),
            Fixability::EnvironmentBound
        );
        assert_eq!(classify(&diag("';' expected")), Fixability::SourceEditable);
        assert_eq!(classify(&diag("reached end of file while parsing")), Fixability::SourceEditable);
        assert_eq!(
            classify(&diag("cannot find symbol\n  symbol:   class Scanner\n  location: class Main")),
            Fixability::EnvironmentBound
        );
        assert_eq!(
            classify(&diag("cannot find symbol\n  symbol:   variable totl\n  location: class Main")),
            Fixability::SourceEditable
        );
    }

    #[test]
    fn target_selection() {
        let mut env = diag("class A is public, should be declared in a file named A.java");
        env.line = 1;
        let mut fix = diag("';' expected");
        fix.line = 8;
        let list = [env, fix.clone()];
        assert_eq!(select_target(&list), Some(&fix));
        assert_eq!(select_target(&[]), None);
    }

    #[test]
    fn parses_javac_stream() {
        let text = "Main.java:3: error: cannot find symbol\n        Foo f;\n        ^\n  symbol:   class Foo\n  location: class Main\nMain.java:5: error: ';' expected\n    int x = 1\n             ^\n2 errors\n";
        let parsed = parse_javac_output(text, PatternTable::builtin());
        assert!(parsed.preamble.is_empty());
        let d = &parsed.diagnostics;
        assert_eq!(d.len(), 2);
        assert_eq!((d[0].line, d[0].col), (3, Some(9)));
        assert_eq!(d[0].headline(), "cannot find symbol");
        assert_eq!(d[0].fixability, Fixability::EnvironmentBound);
        assert_eq!((d[1].line, d[1].col), (5, Some(14)));
        assert_eq!(d[1].message, "';' expected");
        let lines: usize = d.iter().map(|x| x.raw.lines().count()).sum();
        assert_eq!(lines, text.lines().count());
    }

    #[test]
    fn file_naming() {
        assert_eq!(public_class_name("import a.b;\npublic final class Calc { }"), Some("Calc".into()));
        assert_eq!(source_file_name("class Helper {}"), "Main.java");
    }

    #[test]
    fn builtin_compiles_multiplication_program() {
        let src = "import java.util.Scanner;\npublic class Multiplication {\n  public static void main(String[] args) {\n    Scanner sc = new Scanner(System.in);\n    int a = sc.nextInt();\n    int b = sc.nextInt();\n    int res = a x b;\n    System.out.println(res);\n  }\n}\n";
        let c = BuiltinCompiler::default();
        let r = c.compile(src).unwrap();
        assert!(!r.success);
        assert_eq!(r.diagnostics[0].line, 7);
        assert_eq!(r.diagnostics[0].file, PathBuf::from("Multiplication.java"));
        assert!(c.compile(&src.replace("a x b", "a * b")).unwrap().success);
    }

    #[test]
    fn missing_binary_is_unavailable() {
        let c = JavacCompiler::new("/nonexistent/javac");
        assert!(matches!(c.compile("class A {}"), Err(CompileError::CompilerUnavailable(_))));
    }
}
