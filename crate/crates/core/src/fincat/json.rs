//! Category interchange format.
//!
//! ```json
//! {"comp":{"a|b|c":[[[..]]]},"hom":{"a|b":1},"id":{"a":[1]},"objects":["a"],"p":2}
//! ```
//!
//! Keys are sorted, so serialization is canonical and byte-stable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactla::PrimeField;

use super::FinCat;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryDoc {
    pub p: u32,
    pub objects: Vec<String>,
    pub hom: BTreeMap<String, usize>,
    #[serde(default)]
    pub comp: BTreeMap<String, Vec<Vec<Vec<u32>>>>,
    pub id: BTreeMap<String, Vec<u32>>,
}

impl CategoryDoc {
    pub fn from_category(cat: &FinCat) -> Self {
        let n = cat.num_objects();
        let name = |a: usize| cat.object_name(a);
        let mut hom = BTreeMap::new();
        let mut comp = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                hom.insert(format!("{}|{}", name(a), name(b)), cat.hom_dim(a, b));
                for c in 0..n {
                    let (dab, dbc) = (cat.hom_dim(a, b), cat.hom_dim(b, c));
                    if dab == 0 || dbc == 0 {
                        continue;
                    }
                    let t: Vec<Vec<Vec<u32>>> = (0..dab)
                        .map(|i| (0..dbc).map(|j| cat.basis_product(a, b, c, i, j).to_vec()).collect())
                        .collect();
                    comp.insert(format!("{}|{}|{}", name(a), name(b), name(c)), t);
                }
            }
        }
        let id = (0..n).map(|a| (name(a).to_string(), cat.identity_coords(a).to_vec())).collect();
        CategoryDoc {
            p: cat.p(),
            objects: cat.objects().to_vec(),
            hom,
            comp,
            id,
        }
    }

    pub fn to_category(&self) -> Result<FinCat> {
        let field = PrimeField::new(self.p)?;
        let objs = &self.objects;
        let n = objs.len();
        let mut hom = vec![vec![0; n]; n];
        for (a, oa) in objs.iter().enumerate() {
            for (b, ob) in objs.iter().enumerate() {
                hom[a][b] = *self
                    .hom
                    .get(&format!("{oa}|{ob}"))
                    .ok_or_else(|| Error::Format(format!("missing hom entry `{oa}|{ob}`")))?;
            }
        }
        let mut missing = None;
        let mut id = Vec::with_capacity(n);
        for o in objs {
            id.push(
                self.id
                    .get(o)
                    .cloned()
                    .ok_or_else(|| Error::Format(format!("missing identity for `{o}`")))?,
            );
        }
        let cat = FinCat::from_tables(
            field,
            objs.clone(),
            hom,
            |a, b, c| {
                let key = format!("{}|{}|{}", objs[a], objs[b], objs[c]);
                match self.comp.get(&key) {
                    Some(t) => t.clone(),
                    None => {
                        missing.get_or_insert(key);
                        Vec::new()
                    }
                }
            },
            id,
        );
        // A missing table surfaces as a shape error; report the key instead.
        match (cat, missing) {
            (_, Some(key)) => Err(Error::Format(format!("missing composition table `{key}`"))),
            (c, None) => c,
        }
    }
}

/// Canonical JSON text (sorted keys, compact).
pub fn to_json(cat: &FinCat) -> String {
    let v = serde_json::to_value(CategoryDoc::from_category(cat)).expect("category document serializes");
    serde_json::to_string(&v).expect("value serializes")
}

/// Parses the interchange format. The result is not validated.
pub fn from_json(text: &str) -> Result<FinCat> {
    let doc: CategoryDoc = serde_json::from_str(text)?;
    doc.to_category()
}

/// Hex SHA-256 of the canonical JSON text.
pub fn category_hash(cat: &FinCat) -> String {
    let digest = Sha256::digest(to_json(cat).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::catalog;

    #[test]
    fn roundtrip_is_exact() {
        for name in ["pt(2)", "a2cat(3)", "mat2(2)"] {
            let c = catalog(name).unwrap();
            let text = to_json(&c);
            let back = from_json(&text).unwrap();
            assert_eq!(back, c);
            assert_eq!(to_json(&back), text);
        }
    }

    #[test]
    fn keys_are_sorted() {
        let text = to_json(&catalog("a2cat(2)").unwrap());
        assert!(text.starts_with("{\"comp\":"));
        assert!(text.contains("\"hom\":{\"1|1\":1,\"1|2\":1,\"2|1\":0,\"2|2\":1}"));
    }

    #[test]
    fn missing_table_is_reported() {
        let text = to_json(&catalog("a2cat(2)").unwrap()).replace("\"1|1|2\"", "\"x\"");
        let err = from_json(&text).unwrap_err();
        assert!(matches!(err, Error::Format(ref m) if m.contains("1|1|2")), "{err}");
    }

    #[test]
    fn hash_is_stable() {
        let c = catalog("dual(2)").unwrap();
        assert_eq!(category_hash(&c), category_hash(&catalog("dual(2)").unwrap()));
        assert_ne!(category_hash(&c), category_hash(&catalog("dual(3)").unwrap()));
    }
}
