//! Recovering concrete tokens for `<UNK>` edit payloads with the masked LM.

use std::collections::HashMap;

use synfix_core::bpe::{self, SubtokenVocab};
use synfix_core::editdsl::{EditAction, EditCommand, Payload};
use synfix_core::jlex::{self, Category};
use synfix_neural::{Model, Sequence};

use crate::linefix::encode_tokens;
use crate::mlm::encode_lines;
use crate::RepairError;

pub const DEFAULT_TOP_K: usize = 5;
pub const MAX_SUBTOKENS: usize = 5;
pub const WINDOW_BUDGET: usize = 150;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnkKind {
    Insert,
    Change,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnkQuery<'a> {
    pub source: &'a str,
    pub line: u32,
    pub location: usize,
    pub kind: UnkKind,
    pub budget: usize,
}

impl<'a> UnkQuery<'a> {
    /// Query for an UNK action of a plan on `line`; `None` for concrete ones.
    pub fn for_action(source: &'a str, line: u32, action: &EditAction) -> Option<Self> {
        let kind = match &action.command {
            EditCommand::Insert(Payload::Unk) => UnkKind::Insert,
            EditCommand::Change(Payload::Unk) => UnkKind::Change,
            _ => return None,
        };
        Some(UnkQuery { source, line, location: action.location, kind, budget: WINDOW_BUDGET })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TokenCandidate {
    pub text: String,
    /// Mean log-probability per subtoken; `None` for file identifiers.
    pub score: Option<f64>,
}

/// The encoded window around a query, with `slots` MASK ids at the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub seq: Sequence,
    /// Packed position of the first MASK.
    pub mask_at: usize,
}

/// Build the input for `slots` masked subtokens: the target line, then whole
/// lines added alternately above and below while they fit.
pub fn build_window(vocab: &SubtokenVocab, q: &UnkQuery<'_>, slots: usize) -> Result<Window, RepairError> {
    let stream = jlex::tokenize(q.source);
    let toks: Vec<String> = stream.line_tokens(q.line).map_err(|_| RepairError::BadQuery("no such line"))?.into_iter().map(|t| t.text).collect();
    let loc = q.location;
    let (before, after, word) = match q.kind {
        UnkKind::Insert if loc <= toks.len() => (&toks[..loc], &toks[loc..], loc + 1),
        UnkKind::Change if loc >= 1 && loc <= toks.len() => (&toks[..loc - 1], &toks[loc..], loc),
        _ => return Err(RepairError::BadQuery("location out of range")),
    };
    let (bi, bw) = encode_tokens(vocab, before, 1);
    let (ai, aw) = encode_tokens(vocab, after, word as u32 + 1);
    let mut ids = vec![bpe::BOL];
    let mut words = vec![0];
    ids.extend(&bi);
    words.extend(&bw);
    let mut mask_at = ids.len();
    ids.extend(std::iter::repeat(bpe::MASK).take(slots));
    words.extend(std::iter::repeat(word as u32).take(slots));
    ids.extend(&ai);
    words.extend(&aw);
    let room = q.budget.saturating_sub(1);
    if ids.len() > room {
        // centre the cut on the masks
        let lo = (mask_at + slots / 2).saturating_sub(room / 2).min(ids.len() - room);
        ids = ids[lo..lo + room].to_vec();
        words = words[lo..lo + room].to_vec();
        mask_at -= lo;
    }
    let lines = encode_lines(vocab, q.source);
    let pos = lines.iter().position(|l| l.line == q.line);
    let (mut up, mut down) = match pos {
        Some(p) => (p, p + 1),
        None => (lines.len(), lines.len()),
    };
    let mut prefix: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    let mut suffix: Vec<u32> = Vec::new();
    let mut suffix_w: Vec<u32> = Vec::new();
    let mut len = ids.len();
    let mut turn_up = true;
    let (mut up_open, mut down_open) = (true, true);
    while up_open || down_open {
        if turn_up && up_open {
            if up > 0 && len + lines[up - 1].ids.len() <= room {
                up -= 1;
                len += lines[up].ids.len();
                prefix.push((lines[up].ids.clone(), lines[up].words.clone()));
            } else {
                up_open = false;
            }
        } else if !turn_up && down_open {
            if down < lines.len() && len + lines[down].ids.len() <= room {
                len += lines[down].ids.len();
                suffix.extend(&lines[down].ids);
                suffix_w.extend(&lines[down].words);
                down += 1;
            } else {
                down_open = false;
            }
        }
        turn_up = !turn_up;
    }
    let mut seq = Sequence { ids: vec![bpe::CLS], word_index: vec![0] };
    for (i, w) in prefix.iter().rev() {
        seq.ids.extend(i);
        seq.word_index.extend(w);
    }
    let mask_at = seq.ids.len() + mask_at;
    seq.ids.extend(ids);
    seq.word_index.extend(words);
    seq.ids.extend(suffix);
    seq.word_index.extend(suffix_w);
    Ok(Window { seq, mask_at })
}

/// Whether `text` lexes as one identifier, literal or keyword.
pub fn is_single_token(text: &str) -> bool {
    let toks = jlex::tokenize(text);
    let sig: Vec<_> = toks.tokens.iter().collect();
    sig.len() == 1 && matches!(sig[0].category, Category::Identifier | Category::Literal | Category::Keyword)
}

fn log_softmax_top(dist: &[f64], k: usize) -> Vec<(u32, f64)> {
    let mut v: Vec<(u32, f64)> = dist
        .iter()
        .enumerate()
        .skip(bpe::NUM_SPECIAL as usize)
        .map(|(i, &p)| (i as u32, p.max(1e-300).ln()))
        .collect();
    v.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    v.truncate(k);
    v
}

/// Ranked single-token candidates for the masked position. For every
/// subtoken count up to five, the first subtoken branches over the `top_k`
/// most likely ids and the rest is filled greedily, re-predicting after each
/// step.
pub fn recover_unk(
    mlm: &Model<f32>,
    vocab: &SubtokenVocab,
    q: &UnkQuery<'_>,
    top_k: usize,
) -> Result<Vec<TokenCandidate>, RepairError> {
    let mut best: HashMap<String, f64> = HashMap::new();
    for slots in 1..=MAX_SUBTOKENS {
        let w = build_window(vocab, q, slots)?;
        let dist = mlm.mlm_distribution(&w.seq, w.mask_at)?;
        for (first, lp) in log_softmax_top(&dist, top_k) {
            let mut seq = w.seq.clone();
            seq.ids[w.mask_at] = first;
            let mut total = lp;
            let mut ok = true;
            for s in 1..slots {
                let d = mlm.mlm_distribution(&seq, w.mask_at + s)?;
                let Some(&(id, lp)) = log_softmax_top(&d, 1).first() else {
                    ok = false;
                    break;
                };
                seq.ids[w.mask_at + s] = id;
                total += lp;
            }
            if !ok {
                continue;
            }
            let Ok(text) = vocab.decode(&seq.ids[w.mask_at..w.mask_at + slots]) else { continue };
            if !is_single_token(&text) {
                continue;
            }
            let score = total / slots as f64;
            let e = best.entry(text).or_insert(f64::NEG_INFINITY);
            *e = e.max(score);
        }
    }
    if best.is_empty() {
        return Err(RepairError::NoCandidates);
    }
    let mut out: Vec<TokenCandidate> = best.into_iter().map(|(text, s)| TokenCandidate { text, score: Some(s) }).collect();
    out.sort_by(|a, b| b.score.unwrap().total_cmp(&a.score.unwrap()).then_with(|| a.text.cmp(&b.text)));
    out.truncate(top_k);
    Ok(out)
}

/// Identifiers of `source`, most frequent first.
pub fn file_identifiers(source: &str) -> Vec<String> {
    let mut counts: HashMap<String, usize> = HashMap::new();
    for t in jlex::tokenize(source).significant() {
        if t.category == Category::Identifier {
            *counts.entry(t.text.clone()).or_default() += 1;
        }
    }
    let mut v: Vec<(String, usize)> = counts.into_iter().collect();
    v.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    v.into_iter().map(|(t, _)| t).collect()
}

/// Model candidates followed by file identifiers, deduplicated, at most
/// `top_k`. Two slots are kept for identifiers when the file has any.
/// Without a model only file identifiers are offered.
pub fn candidate_pool(
    mlm: Option<(&Model<f32>, &SubtokenVocab)>,
    q: &UnkQuery<'_>,
    top_k: usize,
) -> Result<Vec<TokenCandidate>, RepairError> {
    let idents = file_identifiers(q.source);
    let model_slots = top_k.saturating_sub(idents.len().min(2));
    let mut out = match mlm {
        Some((m, v)) if model_slots > 0 => match recover_unk(m, v, q, model_slots) {
            Ok(c) => c,
            Err(RepairError::NoCandidates) => Vec::new(),
            Err(e) => return Err(e),
        },
        _ => Vec::new(),
    };
    for id in idents {
        if out.len() >= top_k {
            break;
        }
        if !out.iter().any(|c| c.text == id) {
            out.push(TokenCandidate { text: id, score: None });
        }
    }
    if out.is_empty() {
        return Err(RepairError::NoCandidates);
    }
    Ok(out)
}
