//! Evaluation over generated pairs: exact match, compilability accounting,
//! stage attribution, length buckets, error categories and multi-edit
//! accuracy.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use synfix_core::corpusgen::{ErrorCategory, GeneratedPair, BUCKETS};
use synfix_core::jlex;
use synfix_core::par::{self, Execution};

use crate::pipeline::{Repairer, Stage, Status};
use crate::RepairError;

/// Token-level equality ignoring whitespace and comments.
pub fn exact_match(candidate: &str, reference: &str) -> bool {
    jlex::significant_texts(candidate) == jlex::significant_texts(reference)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Exact,
    CompilableNonMatch,
    Failure,
}

/// What happened to one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairResult {
    pub id: String,
    pub bucket: String,
    pub category: ErrorCategory,
    pub num_edits: usize,
    pub verdict: Verdict,
    pub stage: Stage,
    pub status: Status,
    /// Outcome claimed `Fixed` but the output failed to recompile.
    pub unsound: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct BucketRow {
    pub bucket: String,
    pub n: usize,
    pub exact: usize,
    pub compilable_overall: usize,
    pub compilable_nonmatching: usize,
    pub failures: usize,
}

impl BucketRow {
    fn add(&mut self, v: Verdict) {
        self.n += 1;
        match v {
            Verdict::Exact => {
                self.exact += 1;
                self.compilable_overall += 1;
            }
            Verdict::CompilableNonMatch => {
                self.compilable_nonmatching += 1;
                self.compilable_overall += 1;
            }
            Verdict::Failure => self.failures += 1,
        }
    }

    pub fn identity_holds(&self) -> bool {
        self.exact + self.compilable_nonmatching + self.failures == self.n && self.exact <= self.compilable_overall
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CategoryRow {
    pub category: String,
    pub n: usize,
    pub prevalence: f64,
    pub exact: usize,
    pub accuracy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageRow {
    pub stage: String,
    pub exact: usize,
    /// Share of all pairs fixed exactly by this stage, in percent.
    pub contribution: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultiEditRow {
    pub edits: usize,
    pub n: usize,
    pub exact: usize,
    pub accuracy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub exact_match: String,
    pub compiler: String,
    pub totals: BucketRow,
    pub exact_accuracy: f64,
    pub per_bucket: Vec<BucketRow>,
    pub per_category: Vec<CategoryRow>,
    pub per_stage: Vec<StageRow>,
    pub multi_edit: Vec<MultiEditRow>,
    pub unsound_fixed: usize,
}

fn pct(a: usize, n: usize) -> f64 {
    if n == 0 {
        0.0
    } else {
        // rounded so reports stay stable under summation order
        (a as f64 * 1e6 / n as f64).round() / 1e4
    }
}

pub fn evaluate_pair(repairer: &Repairer<'_>, p: &GeneratedPair) -> Result<PairResult, RepairError> {
    let out = repairer.repair_iterative(&p.bad_source);
    let exact = exact_match(&out.fixed_source, &p.fixed_source);
    let mut unsound = false;
    if out.status == Status::Fixed {
        unsound = !repairer.compiler.compile(&out.fixed_source)?.success;
    }
    let verdict = if exact {
        Verdict::Exact
    } else if out.compile_ok && !unsound {
        Verdict::CompilableNonMatch
    } else {
        Verdict::Failure
    };
    Ok(PairResult {
        id: p.pair.meta.id.clone(),
        bucket: p.pair.meta.length_bucket.clone(),
        category: p.pair.meta.category,
        num_edits: p.pair.meta.num_edits,
        verdict,
        stage: out.stage,
        status: out.status,
        unsound,
    })
}

/// Run the pipeline over `pairs` (in parallel when enabled) and aggregate in
/// input order.
pub fn evaluate(repairer: &Repairer<'_>, pairs: &[GeneratedPair]) -> Result<EvalReport, RepairError> {
    evaluate_in(Execution::default(), repairer, pairs)
}

pub fn evaluate_in(exec: Execution, repairer: &Repairer<'_>, pairs: &[GeneratedPair]) -> Result<EvalReport, RepairError> {
    let results: Vec<Result<PairResult, RepairError>> = par::map_slice_in(exec, pairs, |p| evaluate_pair(repairer, p));
    let results: Vec<PairResult> = results.into_iter().collect::<Result<_, _>>()?;
    Ok(aggregate(&results, repairer.compiler.name()))
}

pub fn aggregate(results: &[PairResult], compiler: &str) -> EvalReport {
    let mut totals = BucketRow { bucket: "all".into(), ..Default::default() };
    let mut per_bucket: Vec<BucketRow> = BUCKETS.iter().map(|b| BucketRow { bucket: b.to_string(), ..Default::default() }).collect();
    let mut cat = [(0usize, 0usize); 4];
    let mut stage = [0usize; 3];
    let mut multi = [(0usize, 0usize); 3];
    let mut unsound = 0;
    for r in results {
        totals.add(r.verdict);
        if let Some(b) = per_bucket.iter_mut().find(|b| b.bucket == r.bucket) {
            b.add(r.verdict);
        }
        let exact = r.verdict == Verdict::Exact;
        let ci = ErrorCategory::ALL.iter().position(|c| *c == r.category).unwrap_or(3);
        cat[ci].0 += 1;
        cat[ci].1 += usize::from(exact);
        if exact {
            match r.stage {
                Stage::BlockFix => stage[0] += 1,
                Stage::LineFix => stage[1] += 1,
                Stage::UnkFix => stage[2] += 1,
                Stage::None => {}
            }
        }
        if (1..=3).contains(&r.num_edits) {
            multi[r.num_edits - 1].0 += 1;
            multi[r.num_edits - 1].1 += usize::from(exact);
        }
        unsound += usize::from(r.unsound);
    }
    let n = results.len();
    EvalReport {
        exact_match: "token-level".into(),
        compiler: compiler.into(),
        exact_accuracy: pct(totals.exact, n),
        totals,
        per_bucket,
        per_category: ErrorCategory::ALL
            .iter()
            .zip(cat)
            .map(|(c, (k, e))| CategoryRow {
                category: c.as_str().into(),
                n: k,
                prevalence: if n == 0 { 0.0 } else { k as f64 / n as f64 },
                exact: e,
                accuracy: pct(e, k),
            })
            .collect(),
        per_stage: [Stage::BlockFix, Stage::LineFix, Stage::UnkFix]
            .iter()
            .zip(stage)
            .map(|(s, e)| StageRow { stage: s.as_str().into(), exact: e, contribution: pct(e, n) })
            .collect(),
        multi_edit: (2..=3)
            .map(|k| MultiEditRow { edits: k, n: multi[k - 1].0, exact: multi[k - 1].1, accuracy: pct(multi[k - 1].1, multi[k - 1].0) })
            .collect(),
        unsound_fixed: unsound,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Tsv,
    Markdown,
}

impl ReportFormat {
    /// From a file extension: `json`, `tsv`, or `md`.
    pub fn from_extension(ext: &str) -> Option<Self> {
        match ext {
            "json" => Some(ReportFormat::Json),
            "tsv" => Some(ReportFormat::Tsv),
            "md" | "markdown" => Some(ReportFormat::Markdown),
            _ => None,
        }
    }
}

pub fn render_report(r: &EvalReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
        ReportFormat::Tsv => render_tsv(r),
        ReportFormat::Markdown => render_markdown(r),
    }
}

const BUCKET_HEADER: &str = "bucket\tn\texact\tcompilable_overall\tcompilable_nonmatching\tfailures";

fn render_tsv(r: &EvalReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "#meta\texact_match\t{}\tcompiler\t{}\tunsound_fixed\t{}", r.exact_match, r.compiler, r.unsound_fixed);
    let _ = writeln!(s, "#buckets\t{BUCKET_HEADER}");
    for b in r.per_bucket.iter().chain(std::iter::once(&r.totals)) {
        let _ = writeln!(s, "{}\t{}\t{}\t{}\t{}\t{}", b.bucket, b.n, b.exact, b.compilable_overall, b.compilable_nonmatching, b.failures);
    }
    let _ = writeln!(s, "#categories\tcategory\tn\tprevalence\texact\taccuracy");
    for c in &r.per_category {
        let _ = writeln!(s, "{}\t{}\t{}\t{}\t{}", c.category, c.n, c.prevalence, c.exact, c.accuracy);
    }
    let _ = writeln!(s, "#stages\tstage\texact\tcontribution");
    for st in &r.per_stage {
        let _ = writeln!(s, "{}\t{}\t{}", st.stage, st.exact, st.contribution);
    }
    let _ = writeln!(s, "#multi_edit\tedits\tn\texact\taccuracy");
    for m in &r.multi_edit {
        let _ = writeln!(s, "{}\t{}\t{}\t{}", m.edits, m.n, m.exact, m.accuracy);
    }
    s
}

/// Parse the TSV rendering back into a report.
pub fn parse_tsv(text: &str) -> Result<EvalReport, RepairError> {
    let bad = |m: &str| RepairError::Report(m.to_string());
    let mut r = EvalReport {
        exact_match: String::new(),
        compiler: String::new(),
        totals: BucketRow::default(),
        exact_accuracy: 0.0,
        per_bucket: Vec::new(),
        per_category: Vec::new(),
        per_stage: Vec::new(),
        multi_edit: Vec::new(),
        unsound_fixed: 0,
    };
    let mut section = "";
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad("expected an integer"));
    let real = |s: &str| s.parse::<f64>().map_err(|_| bad("expected a number"));
    for line in text.lines() {
        let f: Vec<&str> = line.split('\t').collect();
        if let Some(tag) = f[0].strip_prefix('#') {
            section = match tag {
                "meta" => {
                    if f.len() != 7 {
                        return Err(bad("meta row"));
                    }
                    r.exact_match = f[2].into();
                    r.compiler = f[4].into();
                    r.unsound_fixed = num(f[6])?;
                    ""
                }
                "buckets" => "b",
                "categories" => "c",
                "stages" => "s",
                "multi_edit" => "m",
                _ => return Err(bad("unknown section")),
            };
            continue;
        }
        match (section, f.len()) {
            ("b", 6) => {
                let row = BucketRow {
                    bucket: f[0].into(),
                    n: num(f[1])?,
                    exact: num(f[2])?,
                    compilable_overall: num(f[3])?,
                    compilable_nonmatching: num(f[4])?,
                    failures: num(f[5])?,
                };
                if row.bucket == "all" {
                    r.totals = row;
                } else {
                    r.per_bucket.push(row);
                }
            }
            ("c", 5) => r.per_category.push(CategoryRow {
                category: f[0].into(),
                n: num(f[1])?,
                prevalence: real(f[2])?,
                exact: num(f[3])?,
                accuracy: real(f[4])?,
            }),
            ("s", 3) => r.per_stage.push(StageRow { stage: f[0].into(), exact: num(f[1])?, contribution: real(f[2])? }),
            ("m", 4) => r.multi_edit.push(MultiEditRow { edits: num(f[0])?, n: num(f[1])?, exact: num(f[2])?, accuracy: real(f[3])? }),
            _ => return Err(bad("malformed row")),
        }
    }
    r.exact_accuracy = pct(r.totals.exact, r.totals.n);
    Ok(r)
}

fn render_markdown(r: &EvalReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "| Tokens | n | Exact % | By BlockFix | By LineFix | Compilable % | Compilable non-match % | Failures |");
    let _ = writeln!(s, "|---|---|---|---|---|---|---|---|");
    // stage columns are only tracked overall; per-bucket rows leave them blank
    for b in &r.per_bucket {
        let _ = writeln!(
            s,
            "| {} | {} | {:.2} | | | {:.2} | {:.2} | {} |",
            b.bucket,
            b.n,
            pct(b.exact, b.n),
            pct(b.compilable_overall, b.n),
            pct(b.compilable_nonmatching, b.n),
            b.failures
        );
    }
    let stage = |name: &str| r.per_stage.iter().find(|x| x.stage == name).map(|x| x.contribution).unwrap_or(0.0);
    let t = &r.totals;
    let _ = writeln!(
        s,
        "| **all** | {} | {:.2} | {:.2} | {:.2} | {:.2} | {:.2} | {} |",
        t.n,
        pct(t.exact, t.n),
        stage("blockfix"),
        stage("linefix") + stage("unkfix"),
        pct(t.compilable_overall, t.n),
        pct(t.compilable_nonmatching, t.n),
        t.failures
    );
    let _ = writeln!(s, "\n| Category | Prevalence % | Exact % |\n|---|---|---|");
    for c in &r.per_category {
        let _ = writeln!(s, "| {} | {:.2} | {:.2} |", c.category, c.prevalence * 100.0, c.accuracy);
    }
    let _ = writeln!(s, "\n| Stage | Exact fixes | Contribution % |\n|---|---|---|");
    for st in &r.per_stage {
        let _ = writeln!(s, "| {} | {} | {:.2} |", st.stage, st.exact, st.contribution);
    }
    let _ = writeln!(s, "\n| Edits | n | Exact % |\n|---|---|---|");
    for m in &r.multi_edit {
        let _ = writeln!(s, "| {} | {} | {:.2} |", m.edits, m.n, m.accuracy);
    }
    let _ = writeln!(s, "\nExact match: {}. Compiler: {}. Unsound fixed outcomes: {}.", r.exact_match, r.compiler, r.unsound_fixed);
    s
}
