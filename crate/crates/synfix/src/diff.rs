//! Line-wise differences between a submitted and a repaired program.

use serde::{Deserialize, Serialize};
use similar::{DiffOp, TextDiff};

/// One changed line. `before` is absent for inserted lines and `after` for
/// deleted ones. `line` counts input lines, except for pure insertions where
/// it is the line number in the output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffLine {
    pub line: u32,
    pub before: Option<String>,
    pub after: Option<String>,
}

pub fn line_diff(before: &str, after: &str) -> Vec<DiffLine> {
    let old: Vec<&str> = before.lines().collect();
    let new: Vec<&str> = after.lines().collect();
    let diff = TextDiff::from_slices(&old, &new);
    let mut out = Vec::new();
    for op in diff.ops() {
        match *op {
            DiffOp::Equal { .. } => {}
            DiffOp::Delete { old_index, old_len, .. } => {
                for i in old_index..old_index + old_len {
                    out.push(DiffLine { line: i as u32 + 1, before: Some(old[i].to_string()), after: None });
                }
            }
            DiffOp::Insert { new_index, new_len, .. } => {
                for j in new_index..new_index + new_len {
                    out.push(DiffLine { line: j as u32 + 1, before: None, after: Some(new[j].to_string()) });
                }
            }
            DiffOp::Replace { old_index, old_len, new_index, new_len } => {
                for k in 0..old_len.max(new_len) {
                    let line = if k < old_len { old_index + k } else { new_index + k };
                    out.push(DiffLine {
                        line: line as u32 + 1,
                        before: old.get(old_index + k).filter(|_| k < old_len).map(|s| s.to_string()),
                        after: new.get(new_index + k).filter(|_| k < new_len).map(|s| s.to_string()),
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn replaced_line_is_reported_once() {
        let d = line_diff("a\nint r = a x b;\nc\n", "a\nint r = a * b;\nc\n");
        assert_eq!(
            d,
            vec![DiffLine { line: 2, before: Some("int r = a x b;".into()), after: Some("int r = a * b;".into()) }]
        );
    }

    #[test]
    fn identical_text_has_no_diff() {
        assert!(line_diff("x\ny", "x\ny").is_empty());
    }

    #[test]
    fn inserted_and_deleted_lines() {
        let d = line_diff("a\nb\n", "a\nb\n}\n");
        assert_eq!(d, vec![DiffLine { line: 3, before: None, after: Some("}".into()) }]);
        let d = line_diff("a\nb\nc\n", "a\nc\n");
        assert_eq!(d, vec![DiffLine { line: 2, before: Some("b".into()), after: None }]);
    }
}
