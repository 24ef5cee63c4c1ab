//! Matrix Market reader (dense target).
//!
//! Accepts `matrix coordinate real general` and `matrix array real general`
//! headers. Coordinate entries are 1-based and unspecified entries are zero;
//! array entries are listed in column-major order per the format definition.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

enum Layout {
    Coordinate,
    Array,
}

pub fn load_matrix_market<P: AsRef<Path>>(path: P) -> Result<DMatrix<f64>> {
    let file = File::open(path.as_ref())?;
    parse(BufReader::new(file))
}

fn parse<R: BufRead>(reader: R) -> Result<DMatrix<f64>> {
    let mut lines = reader.lines().enumerate();

    let (header_no, header) = match lines.next() {
        Some((i, line)) => (i + 1, line?),
        None => {
            return Err(Error::Parse {
                line: 1,
                msg: "empty file".into(),
            })
        }
    };
    let layout = parse_header(header_no, &header)?;

    // Size line: first non-comment, non-blank line after the header.
    let mut size_line = None;
    for (i, line) in &mut lines {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        size_line = Some((i + 1, line));
        break;
    }
    let (size_no, size_line) = size_line.ok_or(Error::Parse {
        line: header_no,
        msg: "missing size line".into(),
    })?;
    let sizes: Vec<&str> = size_line.split_whitespace().collect();

    match layout {
        Layout::Coordinate => {
            if sizes.len() != 3 {
                return Err(Error::Parse {
                    line: size_no,
                    msg: format!("coordinate size line needs 'rows cols nnz', got '{size_line}'"),
                });
            }
            let rows = parse_count(size_no, sizes[0])?;
            let cols = parse_count(size_no, sizes[1])?;
            let nnz = parse_count(size_no, sizes[2])?;
            let mut out = DMatrix::zeros(rows, cols);
            let mut seen = 0usize;
            for (i, line) in &mut lines {
                let line_no = i + 1;
                let line = line?;
                let trimmed = line.trim();
                if trimmed.is_empty() || trimmed.starts_with('%') {
                    continue;
                }
                let toks: Vec<&str> = trimmed.split_whitespace().collect();
                if toks.len() != 3 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected 'i j value', got '{trimmed}'"),
                    });
                }
                let r = parse_count(line_no, toks[0])?;
                let c = parse_count(line_no, toks[1])?;
                if r < 1 || r > rows || c < 1 || c > cols {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("index ({r}, {c}) out of range for {rows}x{cols} matrix"),
                    });
                }
                out[(r - 1, c - 1)] = parse_real(line_no, toks[2])?;
                seen += 1;
            }
            if seen != nnz {
                return Err(Error::Parse {
                    line: size_no,
                    msg: format!("declared {nnz} entries, found {seen}"),
                });
            }
            Ok(out)
        }
        Layout::Array => {
            if sizes.len() != 2 {
                return Err(Error::Parse {
                    line: size_no,
                    msg: format!("array size line needs 'rows cols', got '{size_line}'"),
                });
            }
            let rows = parse_count(size_no, sizes[0])?;
            let cols = parse_count(size_no, sizes[1])?;
            let mut values = Vec::with_capacity(rows * cols);
            let mut last_line = size_no;
            for (i, line) in &mut lines {
                let line_no = i + 1;
                last_line = line_no;
                let line = line?;
                let trimmed = line.trim();
                if trimmed.is_empty() || trimmed.starts_with('%') {
                    continue;
                }
                for tok in trimmed.split_whitespace() {
                    if values.len() == rows * cols {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("more than {rows}x{cols} values in array data"),
                        });
                    }
                    values.push(parse_real(line_no, tok)?);
                }
            }
            if values.len() != rows * cols {
                return Err(Error::Parse {
                    line: last_line,
                    msg: format!("expected {} values, found {}", rows * cols, values.len()),
                });
            }
            // Column-major, per the format.
            Ok(DMatrix::from_vec(rows, cols, values))
        }
    }
}

fn parse_header(line_no: usize, header: &str) -> Result<Layout> {
    let toks: Vec<String> = header
        .split_whitespace()
        .map(|t| t.to_ascii_lowercase())
        .collect();
    let fail = |msg: String| Error::Parse { line: line_no, msg };
    if toks.first().map(String::as_str) != Some("%%matrixmarket") {
        return Err(fail("header must start with '%%MatrixMarket'".into()));
    }
    if toks.len() != 5 {
        return Err(fail(format!(
            "header needs '%%MatrixMarket matrix <format> <field> <symmetry>', got '{header}'"
        )));
    }
    if toks[1] != "matrix" {
        return Err(fail(format!(
            "unsupported object '{}', expected 'matrix'",
            toks[1]
        )));
    }
    let layout = match toks[2].as_str() {
        "coordinate" => Layout::Coordinate,
        "array" => Layout::Array,
        other => return Err(fail(format!("unsupported format '{other}'"))),
    };
    if toks[3] != "real" {
        return Err(fail(format!(
            "unsupported field '{}', expected 'real'",
            toks[3]
        )));
    }
    if toks[4] != "general" {
        return Err(fail(format!(
            "unsupported symmetry '{}', expected 'general'",
            toks[4]
        )));
    }
    Ok(layout)
}

fn parse_count(line_no: usize, tok: &str) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| Error::Parse {
        line: line_no,
        msg: format!("expected a non-negative integer, got '{tok}'"),
    })
}

fn parse_real(line_no: usize, tok: &str) -> Result<f64> {
    let v = tok.parse::<f64>().map_err(|_| Error::Parse {
        line: line_no,
        msg: format!("expected a real number, got '{tok}'"),
    })?;
    if !v.is_finite() {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("non-finite value '{tok}'"),
        });
    }
    Ok(v)
}
