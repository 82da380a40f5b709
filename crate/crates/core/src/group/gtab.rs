//! The `.gtab` text format.
//!
//! ```text
//! # comment
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! Line 1 is the order `r`; the next `r` lines are the rows of the table
//! (entry `j` of row `i` is the product of element `i` and element `j`).
//! Everything after `#` on a line is ignored, as are blank lines.

use super::GroupTable;
use crate::elements::MAX_ORDER;
use crate::error::{Error, Result};

pub fn parse_gtab(text: &str) -> Result<GroupTable> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first_line, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "empty file".into() })?;
    let r: usize = header.parse().map_err(|_| Error::Parse {
        line: first_line,
        msg: format!("expected group order, found `{header}`"),
    })?;
    if r == 0 {
        return Err(Error::Parse { line: first_line, msg: "order must be positive".into() });
    }
    if r > MAX_ORDER {
        return Err(Error::TooLarge { order: r, limit: MAX_ORDER });
    }

    let mut rows = Vec::with_capacity(r);
    for (line, body) in lines.by_ref() {
        let row = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .ok()
                    .filter(|&v| v < r)
                    .ok_or_else(|| Error::Parse { line, msg: format!("bad entry `{tok}`") })
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != r {
            return Err(Error::Parse { line, msg: format!("expected {r} entries, found {}", row.len()) });
        }
        rows.push(row);
        if rows.len() == r {
            break;
        }
    }
    if rows.len() < r {
        return Err(Error::Parse { line: 0, msg: format!("expected {r} rows, found {}", rows.len()) });
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse { line, msg: "trailing data after table".into() });
    }
    GroupTable::from_rows("gtab", &rows)
}

pub fn to_gtab_string(g: &GroupTable) -> String {
    let mut out = format!("# {}\n{}\n", g.name(), g.order());
    for x in 0..g.order() {
        let row: Vec<String> = g.row(x).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
