//! Parser for the OEIS b-file format: one `index value` pair per line,
//! 1-based contiguous indices, `#` comment lines ignored.

use std::fs;
use std::path::Path;

use eulerian2::Int;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: expected \"index value\", found {found:?}")]
    Malformed {
        path: String,
        line: usize,
        found: String,
    },
    #[error("{path}:{line}: non-integer token {token:?}")]
    NonIntegerToken {
        path: String,
        line: usize,
        token: String,
    },
    #[error("{path}:{line}: non-contiguous index {found} (expected {expected})")]
    NonContiguousIndex {
        path: String,
        line: usize,
        expected: i64,
        found: i64,
    },
}

/// A parsed reference sequence.
#[derive(Debug, Clone)]
pub struct ReferenceData {
    /// Sequence id guessed from a `bNNNNNN` file name, e.g. "A008517".
    pub sequence_id: Option<String>,
    /// Values in file order (triangle sequences are row-major).
    pub values: Vec<Int>,
}

pub fn parse_bfile(path: &Path) -> Result<ReferenceData, BFileError> {
    let display = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| BFileError::Io {
        path: display.clone(),
        source,
    })?;
    let mut values = Vec::new();
    let mut expected_index = 1i64;
    for (line_no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(BFileError::Malformed {
                path: display,
                line: line_no + 1,
                found: line.to_string(),
            });
        }
        let index: i64 = tokens[0].parse().map_err(|_| BFileError::NonIntegerToken {
            path: display.clone(),
            line: line_no + 1,
            token: tokens[0].to_string(),
        })?;
        if index != expected_index {
            return Err(BFileError::NonContiguousIndex {
                path: display,
                line: line_no + 1,
                expected: expected_index,
                found: index,
            });
        }
        let value: Int = tokens[1].parse().map_err(|_| BFileError::NonIntegerToken {
            path: display.clone(),
            line: line_no + 1,
            token: tokens[1].to_string(),
        })?;
        values.push(value);
        expected_index += 1;
    }
    let sequence_id = path
        .file_stem()
        .and_then(|s| s.to_str())
        .filter(|s| s.len() == 7 && s.starts_with('b') && s[1..].bytes().all(|b| b.is_ascii_digit()))
        .map(|s| format!("A{}", &s[1..]));
    Ok(ReferenceData {
        sequence_id,
        values,
    })
}
