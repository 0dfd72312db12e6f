//! Independent reference implementations used as test oracles.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use synfix_core::nesting::{Sym, ViolationKind};

/// Brute-force stack simulation over raw characters: only `{` and `}` matter.
/// Returns the first violation as (line, col, kind).
pub fn stack_verdict(text: &str) -> Option<(u32, u32, ViolationKind)> {
    let mut stack: Vec<(u32, u32)> = Vec::new();
    let (mut line, mut col) = (1u32, 1u32);
    for c in text.chars() {
        match c {
            '{' => stack.push((line, col)),
            '}' => {
                if stack.pop().is_none() {
                    return Some((line, col, ViolationKind::UnmatchedClose));
                }
            }
            _ => {}
        }
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    stack.last().map(|&(l, c)| (l, c, ViolationKind::UnclosedOpen))
}

/// Every string over `alphabet` of exactly `len` characters.
pub fn all_strings(alphabet: &[char], len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| alphabet.iter().map(move |c| format!("{s}{c}")))
            .collect();
    }
    out
}

fn balanced(s: &[Sym]) -> bool {
    let mut d = 0i32;
    for x in s {
        match x {
            Sym::Open => d += 1,
            Sym::Close => {
                d -= 1;
                if d < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    d == 0
}

/// Breadth-first search over single-brace insertions and deletions until a
/// balanced sequence is reached. Returns the number of edits.
pub fn bfs_min_cost(start: &[Sym], limit: u32) -> Option<u32> {
    let mut seen: HashSet<Vec<Sym>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back((start.to_vec(), 0u32));
    while let Some((s, d)) = queue.pop_front() {
        if balanced(&s) {
            return Some(d);
        }
        if d == limit {
            continue;
        }
        let mut next = Vec::new();
        for gap in 0..=s.len() {
            for ins in [Sym::Open, Sym::Close] {
                let mut t = s.clone();
                t.insert(gap, ins);
                next.push(t);
            }
        }
        for i in 0..s.len() {
            if matches!(s[i], Sym::Open | Sym::Close) {
                let mut t = s.clone();
                t.remove(i);
                next.push(t);
            }
        }
        for t in next {
            if seen.insert(t.clone()) {
                queue.push_back((t, d + 1));
            }
        }
    }
    None
}

/// All balanced brace-only skeletons with exactly `pairs` pairs.
pub fn dyck_words(pairs: usize) -> Vec<Vec<Sym>> {
    fn go(open: usize, close: usize, cur: &mut Vec<Sym>, out: &mut Vec<Vec<Sym>>) {
        if open == 0 && close == 0 {
            out.push(cur.clone());
            return;
        }
        if open > 0 {
            cur.push(Sym::Open);
            go(open - 1, close + 1, cur, out);
            cur.pop();
        }
        if close > 0 {
            cur.push(Sym::Close);
            go(open, close - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pairs, 0, &mut Vec::new(), &mut out);
    out
}

/// Every skeleton one brace edit away from `base` (deleting a brace or
/// inserting one anywhere), deduplicated.
pub fn one_corruptions(base: &[Sym]) -> Vec<Vec<Sym>> {
    let mut out = HashSet::new();
    for i in 0..base.len() {
        if matches!(base[i], Sym::Open | Sym::Close) {
            let mut t = base.to_vec();
            t.remove(i);
            out.insert(t);
        }
    }
    for gap in 0..=base.len() {
        for ins in [Sym::Open, Sym::Close] {
            let mut t = base.to_vec();
            t.insert(gap, ins);
            out.insert(t);
        }
    }
    let mut v: Vec<_> = out.into_iter().collect();
    v.sort();
    v
}
