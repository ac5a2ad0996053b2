//! SLF, a small line-oriented text format for declaring finite
//! join-semilattices:
//!
//! ```text
//! # the diamond
//! elements 0 p q r 1
//! le 0 p
//! le 0 q
//! le 0 r
//! le p 1
//! le q 1
//! le r 1
//! ```
//!
//! One `elements` line lists the distinct labels; each `le a b` line
//! declares `a ≤ b`. Declared relations are saturated transitively, so both
//! cover pairs and redundant comparabilities are accepted. The least
//! element is found automatically and need not be listed first. `#` starts
//! a comment anywhere in a line; blank lines are ignored. Labels are
//! whitespace-delimited tokens and therefore cannot contain spaces or `#`.

use crate::error::{LatticeError, SlfError};
use crate::order::semilattice::FiniteJoinSemilattice;

/// Parse SLF text. Errors carry the 1-based line they were detected on;
/// structural errors (no least element, missing joins, guard trips) are
/// attributed to the `elements` line.
pub fn parse_slf(input: &str) -> Result<FiniteJoinSemilattice, SlfError> {
    let mut header: Option<(usize, Vec<String>)> = None;
    let mut pairs: Vec<(String, String)> = Vec::new();
    for (ln, raw) in input.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next().unwrap() {
            "elements" => {
                if header.is_some() {
                    return Err(SlfError::syntax(line_no, "duplicate `elements` line"));
                }
                let labels: Vec<String> = tokens.map(str::to_owned).collect();
                if labels.is_empty() {
                    return Err(SlfError::syntax(
                        line_no,
                        "`elements` needs at least one label",
                    ));
                }
                if let Some(dup) = labels
                    .iter()
                    .enumerate()
                    .find_map(|(i, l)| labels[..i].contains(l).then(|| l.clone()))
                {
                    return Err(SlfError::lattice(
                        line_no,
                        LatticeError::DuplicateLabel(dup),
                    ));
                }
                header = Some((line_no, labels));
            }
            "le" => {
                let Some((_, labels)) = &header else {
                    return Err(SlfError::syntax(
                        line_no,
                        "`le` must come after the `elements` line",
                    ));
                };
                match (tokens.next(), tokens.next(), tokens.next()) {
                    (Some(a), Some(b), None) => {
                        for l in [a, b] {
                            if !labels.iter().any(|x| x == l) {
                                return Err(SlfError::lattice(
                                    line_no,
                                    LatticeError::UnknownLabel(l.to_owned()),
                                ));
                            }
                        }
                        pairs.push((a.to_owned(), b.to_owned()));
                    }
                    _ => {
                        return Err(SlfError::syntax(
                            line_no,
                            "`le` needs exactly two labels",
                        ))
                    }
                }
            }
            other => {
                return Err(SlfError::syntax(
                    line_no,
                    format!("unknown keyword `{other}`"),
                ))
            }
        }
    }
    let Some((elements_line, labels)) = header else {
        return Err(SlfError::syntax(1, "missing `elements` line"));
    };
    FiniteJoinSemilattice::from_covers(&labels, &pairs)
        .map_err(|e| SlfError::lattice(elements_line, e))
}

/// Emit SLF text: the labels in index order, then one `le` line per cover
/// pair. `parse_slf(&emit_slf(s))` reproduces `s` exactly, provided the
/// labels are valid SLF tokens (no whitespace, no `#`).
pub fn emit_slf(s: &FiniteJoinSemilattice) -> String {
    let mut out = String::from("elements");
    for name in s.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for &(lo, hi) in s.covers() {
        out.push_str("le ");
        out.push_str(s.name(lo));
        out.push(' ');
        out.push_str(s.name(hi));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::SlfErrorKind;

    #[test]
    fn parses_the_diamond() {
        let text = "# the diamond\nelements 0 p q r 1\nle 0 p\nle 0 q\nle 0 r\nle p 1\nle q 1\nle r 1\n";
        let s = parse_slf(text).unwrap();
        assert_eq!(s, FiniteJoinSemilattice::m3());
    }

    #[test]
    fn least_element_is_found_wherever_declared() {
        let text = "elements a b bot\nle bot a\nle bot b\nle a b\n";
        let s = parse_slf(text).unwrap();
        assert_eq!(s.name(0), "bot");
        assert_eq!(s.size(), 3);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored_and_relations_saturate() {
        let text = "\n  # leading comment\nelements 0 a b # inline\n\nle 0 a\nle a b # a below b\nle 0 b # redundant\n";
        let s = parse_slf(text).unwrap();
        assert_eq!(s.size(), 3);
        assert!(s.leq(0, 2));
    }

    #[test]
    fn error_lines_are_attributed() {
        let missing = parse_slf("").unwrap_err();
        assert_eq!(missing.line, 1);
        let dup_header = parse_slf("elements a\nelements b\n").unwrap_err();
        assert_eq!(dup_header.line, 2);
        let before = parse_slf("le a b\nelements a b\n").unwrap_err();
        assert_eq!(before.line, 1);
        let arity = parse_slf("elements a b\nle a\n").unwrap_err();
        assert_eq!(arity.line, 2);
        let unknown_kw = parse_slf("elements a\nfoo a a\n").unwrap_err();
        assert_eq!(unknown_kw.line, 2);
        let unknown_label = parse_slf("elements a b\nle a c\n").unwrap_err();
        assert_eq!(unknown_label.line, 2);
        assert!(matches!(
            unknown_label.kind,
            SlfErrorKind::Lattice(LatticeError::UnknownLabel(_))
        ));
        let dup_label = parse_slf("elements a a\n").unwrap_err();
        assert!(matches!(
            dup_label.kind,
            SlfErrorKind::Lattice(LatticeError::DuplicateLabel(_))
        ));
    }

    #[test]
    fn structural_errors_point_at_the_elements_line() {
        // two maximal elements with no join
        let text = "# no join\nelements 0 a b\nle 0 a\nle 0 b\n";
        let err = parse_slf(text).unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(
            err.kind,
            SlfErrorKind::Lattice(LatticeError::JoinMissing(_, _))
        ));
        // cycle
        let err = parse_slf("elements a b\nle a b\nle b a\n").unwrap_err();
        assert!(matches!(
            err.kind,
            SlfErrorKind::Lattice(LatticeError::CycleDetected(_))
        ));
    }

    #[test]
    fn round_trips_builtins() {
        for s in [
            FiniteJoinSemilattice::m3(),
            FiniteJoinSemilattice::n5(),
            FiniteJoinSemilattice::powerset(3).unwrap(),
            FiniteJoinSemilattice::chain(5).unwrap(),
        ] {
            assert_eq!(parse_slf(&emit_slf(&s)).unwrap(), s);
        }
    }
}
