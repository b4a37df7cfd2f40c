//! Recursive-descent parser for ring expressions.
//!
//! ```text
//! expr := "Z" int
//!       | "M" int "(" expr ")"
//!       | "T" int "(" expr ")"
//!       | "P" "(" expr { "," expr } ")"
//!       | "Q" "(" expr ";" int { "," int } ")"
//!       | "@" name
//!       | "table:" path
//! ```

use super::table::load_table_file;
use crate::error::{Error, Result};
use crate::ring::RingExpr;

pub fn parse_ring_expr(text: &str) -> Result<RingExpr> {
    let mut p = Parser {
        src: text.as_bytes(),
        text,
        pos: 0,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(&["end of input"]));
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn error(&self, expected: &[&str]) -> Error {
        Error::Parse {
            offset: self.pos + 1,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&[&format!("`{}`", c as char)]))
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&["integer"]));
        }
        self.text[start..self.pos].parse().map_err(|_| {
            self.pos = start;
            self.error(&["integer"])
        })
    }

    fn expr(&mut self) -> Result<RingExpr> {
        const STARTS: &[&str] = &["`Z`", "`M`", "`T`", "`P`", "`Q`", "`@`", "`table:`"];
        self.skip_ws();
        if self.src[self.pos..].starts_with(b"table:") {
            self.pos += "table:".len();
            return self.table_path();
        }
        let Some(c) = self.peek() else {
            return Err(self.error(STARTS));
        };
        match c {
            b'Z' => {
                self.pos += 1;
                Ok(RingExpr::Zmod(self.int()?))
            }
            b'M' | b'T' => {
                self.pos += 1;
                let k = self.int()?;
                self.expect(b'(')?;
                let inner = Box::new(self.expr()?);
                self.expect(b')')?;
                Ok(if c == b'M' {
                    RingExpr::Matrix(k, inner)
                } else {
                    RingExpr::Triangular(k, inner)
                })
            }
            b'P' => {
                self.pos += 1;
                self.expect(b'(')?;
                let mut parts = vec![self.expr()?];
                loop {
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                            parts.push(self.expr()?);
                        }
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.error(&["`,`", "`)`"])),
                    }
                }
                Ok(RingExpr::Product(parts))
            }
            b'Q' => {
                self.pos += 1;
                self.expect(b'(')?;
                let base = Box::new(self.expr()?);
                self.expect(b';')?;
                let mut gens = vec![self.int()?];
                loop {
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                            gens.push(self.int()?);
                        }
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.error(&["`,`", "`)`"])),
                    }
                }
                Ok(RingExpr::Quotient(base, gens))
            }
            b'@' => {
                self.pos += 1;
                self.skip_ws();
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(self.error(&["catalog name"]));
                }
                Ok(RingExpr::Catalog(self.text[start..self.pos].to_string()))
            }
            _ => Err(self.error(STARTS)),
        }
    }

    fn table_path(&mut self) -> Result<RingExpr> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && !self.src[self.pos].is_ascii_whitespace()
            && !matches!(self.src[self.pos], b',' | b';' | b')')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&["path"]));
        }
        load_table_file(&self.text[start..self.pos])
    }
}
