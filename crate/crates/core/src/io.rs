//! Plain-text file formats.
//!
//! Generator matrix: a header line `n k`, then `k` rows of `n` characters
//! from `{0,1}`. Block set: one block per line as space-separated 0-based
//! indices; an empty line is the empty block.

use crate::error::{Error, Result};
use crate::gf2code::{make_code, BinaryCode, BlockSet, Codeword};

fn parse_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

/// Reads a generator matrix; rows need not be independent.
pub fn parse_generator_matrix(text: &str) -> Result<BinaryCode> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| Error::Parse("empty generator-matrix file".into()))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| parse_err(1, format!("bad header field '{t}'"))))
        .collect::<Result<_>>()?;
    let [n, k] = nums[..] else {
        return Err(parse_err(1, "header must be `n k`"));
    };
    let mut rows = Vec::with_capacity(k);
    for (i, line) in lines {
        let row = line.trim();
        if row.len() != n {
            return Err(parse_err(i + 1, format!("expected {n} symbols, found {}", row.len())));
        }
        rows.push(Codeword::from_str01(row).map_err(|e| parse_err(i + 1, e))?);
    }
    if rows.len() != k {
        return Err(Error::Parse(format!("header announces {k} rows, file has {}", rows.len())));
    }
    make_code(n, rows)
}

/// Writes the reduced generator matrix of `code`.
pub fn format_generator_matrix(code: &BinaryCode) -> String {
    let mut out = format!("{} {}\n", code.len(), code.dimension());
    for g in code.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// Reads a block set on `n` points; without `n`, the largest index plus one.
pub fn parse_block_set(text: &str, n: Option<usize>) -> Result<BlockSet> {
    let blocks: Vec<Vec<usize>> = text
        .lines()
        .enumerate()
        .map(|(i, line)| {
            line.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| parse_err(i + 1, format!("bad index '{t}'"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let n = n.unwrap_or_else(|| blocks.iter().flatten().max().map_or(0, |&p| p + 1));
    BlockSet::new(n, blocks)
}

pub fn format_block_set(b: &BlockSet) -> String {
    let mut out = String::new();
    for blk in b.blocks() {
        let line: Vec<String> = blk.iter().map(|p| p.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2code::{extended_hamming, reed_muller_1};

    #[test]
    fn generator_round_trip() {
        for code in [reed_muller_1(3).unwrap(), extended_hamming(4).unwrap(), BinaryCode::zero(5)] {
            let text = format_generator_matrix(&code);
            assert_eq!(parse_generator_matrix(&text).unwrap(), code);
        }
        let rm3 = reed_muller_1(3).unwrap();
        let dual_text = format_generator_matrix(&rm3.dual());
        assert_eq!(dual_text, format_generator_matrix(&rm3));
    }

    #[test]
    fn generator_errors() {
        assert!(parse_generator_matrix("").is_err());
        assert!(parse_generator_matrix("3\n101\n").is_err());
        assert!(parse_generator_matrix("3 1\n1012\n").is_err());
        assert!(parse_generator_matrix("3 2\n101\n").is_err());
        assert!(parse_generator_matrix("3 1\n1a1\n").is_err());
    }

    #[test]
    fn block_round_trip() {
        let b = extended_hamming(3).unwrap().shell(4).unwrap();
        let text = format_block_set(&b);
        assert_eq!(text.lines().next(), Some("0 1 2 3"));
        assert_eq!(parse_block_set(&text, Some(8)).unwrap(), b);
        let zero = extended_hamming(3).unwrap().shell(0).unwrap();
        assert_eq!(parse_block_set(&format_block_set(&zero), Some(8)).unwrap(), zero);
        assert_eq!(parse_block_set("0 2\n1 3\n", None).unwrap().points(), 4);
        assert!(parse_block_set("0 x\n", None).is_err());
        assert!(parse_block_set("0 9\n", Some(8)).is_err());
    }
}
