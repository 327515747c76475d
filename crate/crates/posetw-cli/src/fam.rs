//! The family file format.
//!
//! UTF-8 text: first meaningful line `n=<int>`, then one subset per line
//! in either braced (`{1,3}`, `{}`) or hex (`0x5`) form. Blank lines and
//! `#` comments are ignored. Writers emit members in binary-rank order,
//! so files are canonical.

use std::path::Path;

use anyhow::{bail, Context, Result};
use posetw_core::{SetFamily, SubsetMask};

pub fn parse_str(text: &str) -> Result<SetFamily> {
    let mut n: Option<u32> = None;
    let mut masks: Vec<SubsetMask> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        match n {
            None => {
                let Some(value) = line.strip_prefix("n=") else {
                    bail!("line {}: expected `n=<int>` header, got `{line}`", lineno + 1);
                };
                n = Some(value.trim().parse().context("ground size")?);
            }
            Some(n) => {
                let mask = SubsetMask::parse(line, n)
                    .with_context(|| format!("line {}: `{line}`", lineno + 1))?;
                masks.push(mask);
            }
        }
    }
    let n = n.context("missing `n=<int>` header")?;
    if masks.is_empty() {
        return SetFamily::empty(n).map_err(Into::into);
    }
    SetFamily::from_masks(masks).map_err(Into::into)
}

pub fn to_string(f: &SetFamily) -> String {
    let mut out = format!("n={}\n", f.ground_size());
    for m in f.members() {
        out.push_str(&m.to_string());
        out.push('\n');
    }
    out
}

pub fn read(path: &Path) -> Result<SetFamily> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    parse_str(&text).with_context(|| format!("parsing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_blanks_and_hex() {
        let text = "# a family\nn=4\n\n{1,2}\n0x4   # the set {3}\n{}\n";
        let f = parse_str(text).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.bits(), &[0b0000, 0b0011, 0b0100]);
    }

    #[test]
    fn round_trips() {
        let f = parse_str("n=3\n{1}\n{2,3}\n").unwrap();
        assert_eq!(parse_str(&to_string(&f)).unwrap(), f);
    }

    #[test]
    fn rejects_missing_header_and_bad_sets() {
        assert!(parse_str("{1}\n").is_err());
        assert!(parse_str("n=2\n{5}\n").is_err());
        assert!(parse_str("").is_err());
    }
}
