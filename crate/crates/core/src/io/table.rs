//! Line-oriented ring table files.
//!
//! ```text
//! # the field with two elements
//! order 2
//! one 1
//! add
//! 0 1
//! 1 0
//! mul
//! 0 0
//! 0 1
//! ```

use std::path::Path;

use crate::error::{Error, Result};
use crate::ring::{FiniteRing, RingExpr, TableSpec};

pub fn load_table_file(path: impl AsRef<Path>) -> Result<RingExpr> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(RingExpr::Table(parse_table_text(&text)?))
}

pub fn parse_table_text(text: &str) -> Result<TableSpec> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut last_line = 0;
    let mut next = |what: &str| -> Result<(usize, &str)> {
        match lines.next() {
            Some((n, l)) => {
                last_line = n;
                Ok((n, l))
            }
            None => Err(Error::Format {
                line: last_line + 1,
                message: format!("unexpected end of file, expected {what}"),
            }),
        }
    };

    let (ln, l) = next("`order n`")?;
    let order = keyword_value(ln, l, "order")?;
    if order < 2 {
        return Err(Error::Format {
            line: ln,
            message: format!("order {order} < 2"),
        });
    }
    let (ln, l) = next("`one k`")?;
    let one = keyword_value(ln, l, "one")?;

    let mut read_table = |header: &str| -> Result<Vec<usize>> {
        let (ln, l) = next(header)?;
        if l != header {
            return Err(Error::Format {
                line: ln,
                message: format!("expected `{header}` header, found `{l}`"),
            });
        }
        let mut out = Vec::with_capacity(order * order);
        for _ in 0..order {
            let (ln, l) = next("a table row")?;
            let row = l
                .split_whitespace()
                .map(|t| parse_index(ln, t, order))
                .collect::<Result<Vec<_>>>()?;
            if row.len() != order {
                return Err(Error::Format {
                    line: ln,
                    message: format!("expected {order} entries, found {}", row.len()),
                });
            }
            out.extend(row);
        }
        Ok(out)
    };
    let add = read_table("add")?;
    let mul = read_table("mul")?;
    if let Some((ln, l)) = lines.next() {
        return Err(Error::Format {
            line: ln,
            message: format!("trailing content `{l}`"),
        });
    }
    Ok(TableSpec {
        order,
        one,
        add,
        mul,
    })
}

fn keyword_value(line: usize, text: &str, key: &str) -> Result<usize> {
    let mut parts = text.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(k), Some(v), None) if k == key => v.parse().map_err(|_| Error::Format {
            line,
            message: format!("`{v}` is not a non-negative integer"),
        }),
        _ => Err(Error::Format {
            line,
            message: format!("expected `{key} <int>`, found `{text}`"),
        }),
    }
}

fn parse_index(line: usize, token: &str, order: usize) -> Result<usize> {
    match token.parse::<usize>() {
        Ok(v) if v < order => Ok(v),
        _ => Err(Error::Format {
            line,
            message: format!("`{token}` is not an element index below {order}"),
        }),
    }
}

/// Serializes a ring's tables in the table-file format.
pub fn emit_table(ring: &FiniteRing) -> String {
    let n = ring.order();
    let mut out = format!("order {n}\none {}\nadd\n", ring.one());
    let row = |it: &mut dyn Iterator<Item = usize>| {
        it.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    };
    for a in ring.elements() {
        out.push_str(&row(&mut ring.add_row(a)));
        out.push('\n');
    }
    out.push_str("mul\n");
    for a in ring.elements() {
        out.push_str(&row(&mut ring.mul_row(a)));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Bounds;
    use crate::ring::construct;

    const F2: &str = "order 2\none 1\nadd\n0 1\n1 0\nmul\n0 0\n0 1\n";

    #[test]
    fn field_of_two() {
        let spec = parse_table_text(F2).unwrap();
        let r = construct(&RingExpr::Table(spec), &Bounds::default()).unwrap();
        assert_eq!(r.order(), 2);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# F2\n\norder 2 # size\none 1\nadd\n0 1\n1 0\n\nmul\n0 0\n0 1\n";
        assert_eq!(parse_table_text(text).unwrap(), parse_table_text(F2).unwrap());
    }

    #[test]
    fn format_errors_carry_line_numbers() {
        let bad = "order 2\none 1\nadd\n0 1\n1 0 1\nmul\n0 0\n0 1\n";
        assert!(matches!(parse_table_text(bad), Err(Error::Format { line: 5, .. })));
        let bad = "order 2\nunit 1\n";
        assert!(matches!(parse_table_text(bad), Err(Error::Format { line: 2, .. })));
        let bad = "order 2\none 1\nadd\n0 1\n";
        assert!(matches!(parse_table_text(bad), Err(Error::Format { line: 5, .. })));
    }

    #[test]
    fn non_associative_table_is_rejected_by_construction() {
        // Z/3 addition, multiplication with 2·2 = 2
        let text = "order 3\none 1\nadd\n0 1 2\n1 2 0\n2 0 1\nmul\n0 0 0\n0 1 2\n0 2 2\n";
        let spec = parse_table_text(text).unwrap();
        let err = construct(&RingExpr::Table(spec), &Bounds::default()).unwrap_err();
        assert!(matches!(err, Error::InvalidTables { ref witness, .. } if witness.len() == 3));
    }

    #[test]
    fn emitted_tables_reparse_identically() {
        let r = crate::ring::zmod(6).unwrap();
        let spec = parse_table_text(&emit_table(&r)).unwrap();
        let back = construct(&RingExpr::Table(spec), &Bounds::default()).unwrap();
        assert!(back.same_tables(&r));
    }
}
