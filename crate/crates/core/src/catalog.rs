//! Built-in knots, presented by Seifert matrices.

use std::sync::OnceLock;

use crate::seifert::SeifertMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotCatalogEntry {
    pub name: &'static str,
    pub matrix: SeifertMatrix,
    pub notes: &'static str,
}

const ENTRIES: &[(&str, &[&[i64]], &str)] = &[
    ("unknot", &[], "empty Seifert surface"),
    ("trefoil-right", &[&[-1, 1], &[0, -1]], "right-handed trefoil"),
    ("trefoil-left", &[&[1, 0], &[-1, 1]], "left-handed trefoil, -A^T of trefoil-right"),
    ("figure-eight", &[&[1, 1], &[0, -1]], "figure-eight knot"),
    ("wh-surface-plus", &[&[0, 1], &[0, 1]], "genus-1 surface of an untwisted Whitehead double, positive clasp"),
    ("wh-surface-minus", &[&[0, 1], &[0, -1]], "genus-1 surface of an untwisted Whitehead double, negative clasp"),
];

/// All built-in entries, validated on first use.
pub fn catalog() -> &'static [KnotCatalogEntry] {
    static CATALOG: OnceLock<Vec<KnotCatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        ENTRIES
            .iter()
            .map(|&(name, rows, notes)| KnotCatalogEntry {
                name,
                matrix: SeifertMatrix::new(rows.iter().map(|r| r.to_vec()).collect())
                    .unwrap_or_else(|e| panic!("catalog entry {name} is invalid: {e}")),
                notes,
            })
            .collect()
    })
}

pub fn lookup(name: &str) -> Option<&'static KnotCatalogEntry> {
    catalog().iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::LaurentPoly;

    #[test]
    fn entries() {
        assert_eq!(catalog().len(), 6);
        assert_eq!(lookup("wh-surface-minus").unwrap().matrix, SeifertMatrix::whitehead_surface(-1));
        assert_eq!(lookup("unknot").unwrap().matrix.size(), 0);
        assert_eq!(
            lookup("figure-eight").unwrap().matrix.alexander().poly(),
            &LaurentPoly::from_int_terms(&[(0, 3), (1, -1), (-1, -1)])
        );
        assert_eq!(lookup("trefoil-left").unwrap().matrix, lookup("trefoil-right").unwrap().matrix.mirror());
        assert!(lookup("granny").is_none());
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = catalog().iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), catalog().len());
    }
}
