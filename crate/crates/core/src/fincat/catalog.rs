//! Built-in example categories, addressed as `name(p)`.

use crate::error::{Error, Result};
use crate::exactla::PrimeField;

use super::FinCat;

const NAMES: [&str; 6] = ["pt", "dual", "a2", "mat2", "prod", "a2cat"];

pub fn catalog_names() -> &'static [&'static str] {
    &NAMES
}

fn unit(dim: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

/// Parses `name(p)` (or bare `name` with the fallback modulus).
pub fn parse_catalog_ref(s: &str, default_p: Option<u32>) -> Result<(String, u32)> {
    let s = s.trim();
    let s = s.strip_prefix("catalog:").unwrap_or(s);
    if let Some(open) = s.find('(') {
        let name = &s[..open];
        let inner = s[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| Error::UnknownCatalog(s.to_string()))?;
        let p = inner.trim().parse().map_err(|_| Error::UnknownCatalog(s.to_string()))?;
        Ok((name.to_string(), p))
    } else {
        Ok((s.to_string(), default_p.unwrap_or(2)))
    }
}

/// Looks up a catalog category such as `"a2cat(2)"` or `"catalog:dual(3)"`.
pub fn catalog(name: &str) -> Result<FinCat> {
    let (base, p) = parse_catalog_ref(name, None)?;
    let cat = match base.as_str() {
        // F_p
        "pt" => FinCat::from_ring_table(p, 1, &[vec![vec![1]]], &[1])?,
        // F_p[x]/(x^2), basis 1, x
        "dual" => FinCat::from_ring_table(
            p,
            2,
            &[vec![unit(2, 0), unit(2, 1)], vec![unit(2, 1), vec![0, 0]]],
            &[1, 0],
        )?,
        // upper triangular 2x2 matrices, basis e11, e12, e22
        "a2" => {
            let z = vec![0; 3];
            let mult = vec![
                vec![unit(3, 0), unit(3, 1), z.clone()],
                vec![z.clone(), z.clone(), unit(3, 1)],
                vec![z.clone(), z.clone(), unit(3, 2)],
            ];
            FinCat::from_ring_table(p, 3, &mult, &[1, 0, 1])?
        }
        // M_2(F_p), basis e11, e12, e21, e22
        "mat2" => {
            let idx = |i: usize, j: usize| i * 2 + j;
            let mult: Vec<Vec<Vec<u32>>> = (0..4)
                .map(|x| {
                    (0..4)
                        .map(|y| {
                            let (i, j) = (x / 2, x % 2);
                            let (k, l) = (y / 2, y % 2);
                            if j == k {
                                unit(4, idx(i, l))
                            } else {
                                vec![0; 4]
                            }
                        })
                        .collect()
                })
                .collect();
            FinCat::from_ring_table(p, 4, &mult, &[1, 0, 0, 1])?
        }
        // F_p × F_p, basis (1,0), (0,1)
        "prod" => FinCat::from_ring_table(
            p,
            2,
            &[vec![unit(2, 0), vec![0, 0]], vec![vec![0, 0], unit(2, 1)]],
            &[1, 1],
        )?,
        // two objects 1, 2 and one arrow α: 1 → 2
        "a2cat" => {
            let hom = vec![vec![1, 1], vec![0, 1]];
            FinCat::from_tables(
                PrimeField::new(p)?,
                vec!["1".into(), "2".into()],
                hom,
                |_, _, _| vec![vec![vec![1]]],
                vec![vec![1], vec![1]],
            )?
        }
        _ => return Err(Error::UnknownCatalog(name.to_string())),
    };
    cat.ensure_valid()?;
    Ok(cat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::all_vectors;

    #[test]
    fn every_catalog_entry_validates() {
        for n in NAMES {
            for p in [2, 3] {
                let c = catalog(&format!("{n}({p})")).unwrap();
                assert!(c.validate().is_valid(), "{n}({p})");
            }
        }
    }

    #[test]
    fn unknown_names() {
        assert!(matches!(catalog("nope(2)"), Err(Error::UnknownCatalog(_))));
        assert!(matches!(catalog("pt(4)"), Err(Error::NotPrime(4))));
    }

    #[test]
    fn prod_has_four_idempotents() {
        let c = catalog("prod(2)").unwrap();
        assert_eq!(c.num_objects(), 1);
        assert_eq!(c.hom_dim(0, 0), 2);
        let count = all_vectors(c.field(), 2)
            .filter(|v| c.compose_coords(0, 0, 0, v, v) == *v)
            .count();
        assert_eq!(count, 4);
    }

    #[test]
    fn a2cat_total_dim() {
        assert_eq!(catalog("a2cat(2)").unwrap().total_hom_dim(), 3);
    }

    #[test]
    fn opposite_is_an_involution() {
        for n in NAMES {
            let c = catalog(&format!("{n}(3)")).unwrap();
            let op = c.opposite();
            assert!(op.validate().is_valid());
            assert_eq!(op.opposite(), c);
        }
    }

    #[test]
    fn catalog_refs() {
        assert_eq!(parse_catalog_ref("catalog:a2cat", Some(3)).unwrap(), ("a2cat".into(), 3));
        assert_eq!(parse_catalog_ref("dual(5)", None).unwrap(), ("dual".into(), 5));
    }
}
