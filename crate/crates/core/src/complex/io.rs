//! Plain-text serialization of a free complex:
//!
//! ```text
//! complex length=2
//! ranks 1 3 2
//! d[1] (0,0) = x[1,1]y[1] - ...
//! d[2] (1,0) = ...
//! ```
//!
//! One line per nonzero entry; the polynomial text round-trips exactly.

use super::{BasisLabel, FreeComplex, SparseMat};
use crate::ring::parse_polynomial;

#[derive(Debug, thiserror::Error)]
pub enum ComplexIoError {
    #[error("line {0}: {1}")]
    Malformed(usize, String),
    #[error("line {line}: polynomial parse error: {source}")]
    BadPolynomial {
        line: usize,
        #[source]
        source: crate::ring::ParseError,
    },
    #[error("entry out of shape at line {0}")]
    OutOfShape(usize),
}

pub fn write_complex(c: &FreeComplex) -> String {
    let mut out = String::new();
    out.push_str(&format!("complex length={}\n", c.length()));
    out.push_str("ranks");
    for r in &c.ranks {
        out.push_str(&format!(" {}", r));
    }
    out.push('\n');
    for (idx, d) in c.diffs.iter().enumerate() {
        for (&(r, cc), p) in d.iter() {
            out.push_str(&format!("d[{}] ({},{}) = {}\n", idx + 1, r, cc, p));
        }
    }
    out
}

pub fn read_complex(text: &str) -> Result<FreeComplex, ComplexIoError> {
    let mut lines = text.lines().enumerate();
    let (ln, header) = lines
        .next()
        .ok_or_else(|| ComplexIoError::Malformed(1, "empty input".into()))?;
    let length: usize = header
        .strip_prefix("complex length=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| ComplexIoError::Malformed(ln + 1, "bad header".into()))?;
    let (ln, ranks_line) = lines
        .next()
        .ok_or_else(|| ComplexIoError::Malformed(2, "missing ranks line".into()))?;
    let ranks: Vec<usize> = ranks_line
        .strip_prefix("ranks")
        .ok_or_else(|| ComplexIoError::Malformed(ln + 1, "missing ranks line".into()))?
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| ComplexIoError::Malformed(ln + 1, e.to_string()))?;
    if ranks.len() != length + 1 {
        return Err(ComplexIoError::Malformed(
            ln + 1,
            format!("expected {} ranks, got {}", length + 1, ranks.len()),
        ));
    }
    let mut diffs: Vec<SparseMat> = (0..length)
        .map(|k| SparseMat::zero(ranks[k], ranks[k + 1]))
        .collect();
    for (ln, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let malformed = || ComplexIoError::Malformed(ln + 1, "expected `d[k] (r,c) = poly`".into());
        let rest = line.strip_prefix("d[").ok_or_else(malformed)?;
        let (k_str, rest) = rest.split_once(']').ok_or_else(malformed)?;
        let k: usize = k_str.trim().parse().map_err(|_| malformed())?;
        let rest = rest.trim_start();
        let rest = rest.strip_prefix('(').ok_or_else(malformed)?;
        let (rc, rest) = rest.split_once(')').ok_or_else(malformed)?;
        let (r_str, c_str) = rc.split_once(',').ok_or_else(malformed)?;
        let r: usize = r_str.trim().parse().map_err(|_| malformed())?;
        let c: usize = c_str.trim().parse().map_err(|_| malformed())?;
        let poly_text = rest
            .trim_start()
            .strip_prefix('=')
            .ok_or_else(malformed)?
            .trim();
        if k == 0 || k > length {
            return Err(ComplexIoError::OutOfShape(ln + 1));
        }
        let d = &mut diffs[k - 1];
        if r >= d.nrows || c >= d.ncols {
            return Err(ComplexIoError::OutOfShape(ln + 1));
        }
        let p = parse_polynomial(poly_text).map_err(|source| ComplexIoError::BadPolynomial {
            line: ln + 1,
            source,
        })?;
        d.set(r, c, p);
    }
    let bases = ranks
        .iter()
        .map(|&r| (0..r).map(BasisLabel::Anonymous).collect())
        .collect();
    Ok(FreeComplex {
        ranks,
        diffs,
        bases,
    })
}
