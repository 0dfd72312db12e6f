//! Byte-level byte-pair-encoding vocabulary.
//!
//! Ids `0..7` are the special symbols, `7..263` the raw bytes, and every merge
//! adds one id after that. Text is pre-split into maximal runs of whitespace and
//! of non-whitespace; merges never cross a run boundary.

use std::collections::{BinaryHeap, HashMap, HashSet};
use std::io::{BufRead, Write};
use std::path::Path;

use thiserror::Error;

pub const PAD: u32 = 0;
pub const CLS: u32 = 1;
pub const SEP: u32 = 2;
pub const MASK: u32 = 3;
pub const UNK: u32 = 4;
pub const BOL: u32 = 5;
pub const CTX: u32 = 6;

pub const SPECIAL_NAMES: [&str; 7] = ["<pad>", "<cls>", "<sep>", "<mask>", "<unk>", "<bol>", "<ctx>"];
pub const NUM_SPECIAL: u32 = SPECIAL_NAMES.len() as u32;
pub const BYTE_BASE: u32 = NUM_SPECIAL;
/// Size of a vocabulary without merges.
pub const BASE_SIZE: u32 = NUM_SPECIAL + 256;
pub const DEFAULT_VOCAB_SIZE: usize = 4096;

const MAGIC: &str = "SYNFIX-BPE 1";

#[derive(Debug, Error)]
pub enum BpeError {
    #[error("training corpus is empty")]
    EmptyCorpus,
    #[error("target vocabulary size {0} is below the base size {BASE_SIZE}")]
    TargetTooSmall(usize),
    #[error("id {id} is outside the vocabulary (size {size})")]
    UnknownId { id: u32, size: usize },
    #[error("malformed vocabulary file at line {line}: {reason}")]
    Format { line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtokenVocab {
    merges: Vec<(u32, u32)>,
    ranks: HashMap<(u32, u32), u32>,
    pieces: Vec<Vec<u8>>,
}

/// Split into alternating whitespace / non-whitespace runs.
pub fn pre_split(text: &str) -> impl Iterator<Item = &str> {
    let mut rest = text;
    std::iter::from_fn(move || {
        let first = rest.chars().next()?;
        let ws = first.is_whitespace();
        let end = rest
            .char_indices()
            .find(|(_, c)| c.is_whitespace() != ws)
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let (word, tail) = rest.split_at(end);
        rest = tail;
        Some(word)
    })
}

fn byte_id(b: u8) -> u32 {
    BYTE_BASE + b as u32
}

/// Deterministic tie-break key so equal-count pairs are ordered by the seed.
fn tie_key(seed: u64, pair: (u32, u32)) -> u64 {
    let mut z = seed ^ ((pair.0 as u64) << 32 | pair.1 as u64);
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn merge_in_place(symbols: &mut Vec<u32>, pair: (u32, u32), new_id: u32) -> bool {
    let mut out = Vec::with_capacity(symbols.len());
    let mut i = 0;
    let mut changed = false;
    while i < symbols.len() {
        if i + 1 < symbols.len() && symbols[i] == pair.0 && symbols[i + 1] == pair.1 {
            out.push(new_id);
            i += 2;
            changed = true;
        } else {
            out.push(symbols[i]);
            i += 1;
        }
    }
    *symbols = out;
    changed
}

/// Learn a vocabulary of at most `target_size` ids from `corpus`.
pub fn train_vocab<I, S>(corpus: I, target_size: usize, seed: u64) -> Result<SubtokenVocab, BpeError>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    if target_size < BASE_SIZE as usize {
        return Err(BpeError::TargetTooSmall(target_size));
    }
    let mut word_counts: HashMap<String, u64> = HashMap::new();
    let mut docs = 0usize;
    for doc in corpus {
        docs += 1;
        for w in pre_split(doc.as_ref()) {
            *word_counts.entry(w.to_string()).or_default() += 1;
        }
    }
    if docs == 0 || word_counts.is_empty() {
        return Err(BpeError::EmptyCorpus);
    }
    // Sorted so that training does not depend on hash-map iteration order.
    let mut entries: Vec<(String, u64)> = word_counts.into_iter().collect();
    entries.sort();
    let counts: Vec<u64> = entries.iter().map(|(_, c)| *c).collect();
    let mut words: Vec<Vec<u32>> =
        entries.iter().map(|(w, _)| w.bytes().map(byte_id).collect()).collect();

    let mut pair_counts: HashMap<(u32, u32), u64> = HashMap::new();
    let mut where_: HashMap<(u32, u32), HashSet<usize>> = HashMap::new();
    for (wi, w) in words.iter().enumerate() {
        for p in w.windows(2) {
            let pair = (p[0], p[1]);
            *pair_counts.entry(pair).or_default() += counts[wi];
            where_.entry(pair).or_default().insert(wi);
        }
    }
    let mut heap: BinaryHeap<(u64, u64, (u32, u32))> = pair_counts
        .iter()
        .map(|(&pair, &c)| (c, tie_key(seed, pair), pair))
        .collect();

    let mut vocab = SubtokenVocab::base();
    while vocab.size() < target_size {
        let Some((count, _, pair)) = heap.pop() else { break };
        if pair_counts.get(&pair).copied() != Some(count) || count == 0 {
            continue;
        }
        let new_id = vocab.push_merge(pair);
        let affected: Vec<usize> = {
            let mut v: Vec<usize> = where_.remove(&pair).unwrap_or_default().into_iter().collect();
            v.sort_unstable();
            v
        };
        let mut touched: HashSet<(u32, u32)> = HashSet::new();
        for wi in affected {
            let c = counts[wi];
            for p in words[wi].windows(2) {
                let old = (p[0], p[1]);
                if let Some(pc) = pair_counts.get_mut(&old) {
                    *pc -= c;
                }
                touched.insert(old);
            }
            merge_in_place(&mut words[wi], pair, new_id);
            for p in words[wi].windows(2) {
                let new = (p[0], p[1]);
                *pair_counts.entry(new).or_default() += c;
                where_.entry(new).or_default().insert(wi);
                touched.insert(new);
            }
        }
        pair_counts.remove(&pair);
        let mut touched: Vec<_> = touched.into_iter().collect();
        touched.sort_unstable();
        for p in touched {
            if let Some(&c) = pair_counts.get(&p) {
                if c > 0 {
                    heap.push((c, tie_key(seed, p), p));
                }
            }
        }
    }
    Ok(vocab)
}

impl SubtokenVocab {
    /// A vocabulary with specials and bytes only.
    pub fn base() -> Self {
        let mut pieces: Vec<Vec<u8>> = vec![Vec::new(); NUM_SPECIAL as usize];
        pieces.extend((0..=255u8).map(|b| vec![b]));
        SubtokenVocab { merges: Vec::new(), ranks: HashMap::new(), pieces }
    }

    fn push_merge(&mut self, pair: (u32, u32)) -> u32 {
        let id = self.pieces.len() as u32;
        let mut piece = self.pieces[pair.0 as usize].clone();
        piece.extend_from_slice(&self.pieces[pair.1 as usize]);
        self.pieces.push(piece);
        self.ranks.insert(pair, self.merges.len() as u32);
        self.merges.push(pair);
        id
    }

    pub fn size(&self) -> usize {
        self.pieces.len()
    }

    pub fn merges(&self) -> &[(u32, u32)] {
        &self.merges
    }

    /// Keep only the first `n` merges.
    pub fn truncated(&self, n: usize) -> Self {
        let mut v = Self::base();
        for &m in self.merges.iter().take(n) {
            v.push_merge(m);
        }
        v
    }

    pub fn is_special(id: u32) -> bool {
        id < NUM_SPECIAL
    }

    /// Bytes a (non-special) id stands for.
    pub fn piece(&self, id: u32) -> Result<&[u8], BpeError> {
        self.pieces
            .get(id as usize)
            .map(|p| p.as_slice())
            .ok_or(BpeError::UnknownId { id, size: self.size() })
    }

    pub fn encode(&self, text: &str) -> Vec<u32> {
        let mut out = Vec::new();
        for word in pre_split(text) {
            self.encode_word(word, &mut out);
        }
        out
    }

    fn encode_word(&self, word: &str, out: &mut Vec<u32>) {
        let mut symbols: Vec<u32> = word.bytes().map(byte_id).collect();
        while symbols.len() > 1 {
            let best = symbols
                .windows(2)
                .filter_map(|p| self.ranks.get(&(p[0], p[1])).map(|&r| (r, (p[0], p[1]))))
                .min();
            let Some((rank, pair)) = best else { break };
            merge_in_place(&mut symbols, pair, BASE_SIZE + rank);
        }
        out.extend(symbols);
    }

    pub fn decode(&self, ids: &[u32]) -> Result<String, BpeError> {
        let mut bytes = Vec::new();
        for &id in ids {
            bytes.extend_from_slice(self.piece(id)?);
        }
        Ok(String::from_utf8_lossy(&bytes).into_owned())
    }

    /// Human-readable form of one id, for debugging and reports.
    pub fn display(&self, id: u32) -> String {
        if Self::is_special(id) {
            return SPECIAL_NAMES[id as usize].to_string();
        }
        match self.piece(id) {
            Ok(p) => String::from_utf8_lossy(p).into_owned(),
            Err(_) => format!("<{id}?>"),
        }
    }

    pub fn write_to(&self, mut w: impl Write) -> Result<(), BpeError> {
        writeln!(w, "{MAGIC}")?;
        for name in SPECIAL_NAMES {
            writeln!(w, "special {name}")?;
        }
        for (a, b) in &self.merges {
            writeln!(w, "{a} {b}")?;
        }
        Ok(())
    }

    pub fn read_from(r: impl BufRead) -> Result<Self, BpeError> {
        let mut vocab = Self::base();
        let mut specials = 0;
        for (i, line) in r.lines().enumerate() {
            let line = line?;
            let lineno = i + 1;
            let bad = |reason: &str| BpeError::Format { line: lineno, reason: reason.to_string() };
            if i == 0 {
                if line.trim() != MAGIC {
                    return Err(bad("missing `SYNFIX-BPE 1` header"));
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix("special ") {
                if specials >= SPECIAL_NAMES.len() || SPECIAL_NAMES[specials] != name.trim() {
                    return Err(bad("unexpected special symbol"));
                }
                specials += 1;
                continue;
            }
            if specials != SPECIAL_NAMES.len() {
                return Err(bad("merges before the special symbols"));
            }
            let mut parts = line.split_whitespace().map(str::parse::<u32>);
            let (Some(Ok(a)), Some(Ok(b)), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(bad("expected `<left id> <right id>`"));
            };
            let next = vocab.size() as u32;
            if a < BYTE_BASE || b < BYTE_BASE || a >= next || b >= next {
                return Err(bad("merge refers to an undefined symbol"));
            }
            vocab.push_merge((a, b));
        }
        if specials != SPECIAL_NAMES.len() {
            return Err(BpeError::Format { line: 0, reason: "missing special symbols".into() });
        }
        Ok(vocab)
    }

    pub fn save(&self, path: &Path) -> Result<(), BpeError> {
        let f = std::fs::File::create(path)?;
        let mut w = std::io::BufWriter::new(f);
        self.write_to(&mut w)?;
        w.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, BpeError> {
        let f = std::fs::File::open(path)?;
        Self::read_from(std::io::BufReader::new(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn first_merge_is_most_frequent_pair() {
        let v = train_vocab(["aaab", "aaab"], BASE_SIZE as usize + 4, 0).unwrap();
        let a = byte_id(b'a');
        assert_eq!(v.merges()[0], (a, a));
    }

    #[test]
    fn base_target_means_no_merges() {
        let v = train_vocab(["hello world"], BASE_SIZE as usize, 3).unwrap();
        assert!(v.merges().is_empty());
        assert_eq!(v.encode("hey").len(), 3);
    }

    #[test]
    fn training_is_deterministic() {
        let corpus = ["int x = 0;", "int y = x + 1;", "for (int i = 0; i < n; i++) {}"];
        let a = train_vocab(corpus, 300, 9).unwrap();
        let b = train_vocab(corpus, 300, 9).unwrap();
        assert_eq!(a.merges(), b.merges());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(train_vocab(Vec::<String>::new(), 400, 0), Err(BpeError::EmptyCorpus)));
        assert!(matches!(train_vocab(["x"], 10, 0), Err(BpeError::TargetTooSmall(10))));
        let v = SubtokenVocab::base();
        assert!(matches!(v.decode(&[999]), Err(BpeError::UnknownId { id: 999, .. })));
    }

    #[test]
    fn specials_decode_to_nothing() {
        let v = SubtokenVocab::base();
        assert_eq!(v.decode(&[PAD, PAD]).unwrap(), "");
        assert_eq!(v.encode(""), Vec::<u32>::new());
    }

    #[test]
    fn merges_do_not_cross_whitespace() {
        let v = train_vocab(["a a a a a a"], BASE_SIZE as usize + 10, 0).unwrap();
        for &(l, r) in v.merges() {
            let piece = [v.piece(l).unwrap(), v.piece(r).unwrap()].concat();
            let ws = piece.iter().filter(|b| b.is_ascii_whitespace()).count();
            assert!(ws == 0 || ws == piece.len());
        }
    }

    #[test]
    fn file_round_trip() {
        let v = train_vocab(["public static void main", "public class Main"], 300, 1).unwrap();
        let mut buf = Vec::new();
        v.write_to(&mut buf).unwrap();
        let back = SubtokenVocab::read_from(buf.as_slice()).unwrap();
        assert_eq!(v, back);
        assert!(SubtokenVocab::read_from("nope\n".as_bytes()).is_err());
        let bad = format!("{MAGIC}\n{}\n9999 7\n", SPECIAL_NAMES.map(|s| format!("special {s}")).join("\n"));
        assert!(matches!(SubtokenVocab::read_from(bad.as_bytes()), Err(BpeError::Format { .. })));
    }

    fn java_vocab() -> SubtokenVocab {
        let corpus = [
            "public class Main { public static void main(String[] args) { } }",
            "int total = 0; for (int i = 0; i < 10; i++) { total += i; }",
            "System.out.println(\"Hello, world\");",
        ];
        train_vocab(corpus, 420, 5).unwrap()
    }

    proptest! {
        #[test]
        fn round_trip(s in "\\PC{0,60}") {
            let v = java_vocab();
            prop_assert_eq!(v.decode(&v.encode(&s)).unwrap(), s);
        }

        #[test]
        fn more_merges_never_lengthen(s in "[a-z (){};=+0-9\n\t]{0,80}", k in 0usize..150) {
            let v = java_vocab();
            let small = v.truncated(k);
            let big = v.truncated(k + 1);
            prop_assert!(big.encode(&s).len() <= small.encode(&s).len());
        }

        #[test]
        fn fuzzed_ids_decode(ids in proptest::collection::vec(0u32..420, 0..40)) {
            let v = java_vocab();
            let ids: Vec<u32> = ids.into_iter().filter(|&i| (i as usize) < v.size()).collect();
            prop_assert!(v.decode(&ids).is_ok());
        }
    }
}
