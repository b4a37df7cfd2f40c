//! Built-in named rings.

use super::parse::parse_ring_expr;
use super::table::parse_table_text;
use crate::error::{Error, Result};
use crate::ring::RingExpr;

/// GF(4) = F2[a]/(a² + a + 1); index 2 is `a`, index 3 is `a + 1`.
pub const GF4_TABLE: &str = "\
# GF(4): 0, 1, a, a+1
order 4
one 1
add
0 1 2 3
1 0 3 2
2 3 0 1
3 2 1 0
mul
0 0 0 0
0 1 2 3
0 2 3 1
0 3 1 2
";

/// `(name, expression)`; the expression `gf4` is special-cased to its table.
const ENTRIES: &[(&str, &str)] = &[
    ("z4", "Z 4"),
    ("z6", "Z 6"),
    ("z8", "Z 8"),
    ("z12", "Z 12"),
    ("f2", "Z 2"),
    ("f3", "Z 3"),
    ("gf4", "<table>"),
    ("m2f2", "M 2 (Z 2)"),
    ("t2f2", "T 2 (Z 2)"),
    ("t3f2", "T 3 (Z 2)"),
    ("z4xz3", "P (Z 4, Z 3)"),
    ("z4xm2f2", "P (Z 4, M 2 (Z 2))"),
    ("z6xz4", "P (Z 6, Z 4)"),
    ("t2f2xz3", "P (T 2 (Z 2), Z 3)"),
    ("t2z4", "T 2 (Z 4)"),
    ("z2xt2f2", "P (Z 2, T 2 (Z 2))"),
];

/// Catalog names in their fixed listing order.
pub fn catalog_names() -> Vec<&'static str> {
    ENTRIES.iter().map(|(n, _)| *n).collect()
}

/// Source text of a catalog entry (an expression or the GF(4) table).
pub fn catalog_source(name: &str) -> Result<&'static str> {
    ENTRIES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(n, src)| if *n == "gf4" { GF4_TABLE } else { *src })
        .ok_or_else(|| Error::UnknownCatalogName(name.to_string()))
}

pub fn catalog_lookup(name: &str) -> Result<RingExpr> {
    let src = catalog_source(name)?;
    if name == "gf4" {
        return Ok(RingExpr::Table(parse_table_text(src)?));
    }
    parse_ring_expr(src)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Bounds;
    use crate::ring::{construct, units};

    #[test]
    fn lookups() {
        assert_eq!(catalog_lookup("z6").unwrap(), RingExpr::Zmod(6));
        assert_eq!(
            catalog_lookup("m2f2").unwrap(),
            RingExpr::Matrix(2, Box::new(RingExpr::Zmod(2)))
        );
        assert_eq!(
            catalog_lookup("nope").unwrap_err(),
            Error::UnknownCatalogName("nope".into())
        );
    }

    #[test]
    fn gf4_is_a_field() {
        let r = construct(&catalog_lookup("gf4").unwrap(), &Bounds::default()).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(units(&r).len(), 3);
    }

    #[test]
    fn every_entry_constructs() {
        for name in catalog_names() {
            let r = construct(&RingExpr::Catalog(name.into()), &Bounds::default()).unwrap();
            assert_eq!(r.label(), name);
        }
    }
}
