//! Module interchange format.
//!
//! ```json
//! {"action":{"a|b|0":[[1]]},"category":"<sha256>","dims":{"a":1}}
//! ```
//!
//! `category` is the [`category_hash`] of the category the module lives
//! over; loading against any other category fails.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::fincat::{category_hash, FinCat};

use super::FinModule;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub category: String,
    pub dims: BTreeMap<String, usize>,
    /// `"a|b|i"` → rows of `M(α_i)` for the `i`-th basis morphism `a → b`.
    #[serde(default)]
    pub action: BTreeMap<String, Vec<Vec<u32>>>,
}

impl ModuleDoc {
    pub fn from_module(cat: &FinCat, m: &FinModule) -> Self {
        let n = cat.num_objects();
        let name = |a: usize| cat.object_name(a).to_string();
        let dims = (0..n).map(|a| (name(a), m.dim(a))).collect();
        let mut action = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                if m.dim(a) == 0 || m.dim(b) == 0 {
                    continue;
                }
                for i in 0..cat.hom_dim(a, b) {
                    action.insert(format!("{}|{}|{i}", name(a), name(b)), m.basis_action(a, b, i).to_rows());
                }
            }
        }
        ModuleDoc { category: category_hash(cat), dims, action }
    }

    pub fn to_module(&self, cat: &FinCat) -> Result<FinModule> {
        let hash = category_hash(cat);
        if self.category != hash {
            return Err(Error::Format(format!("module refers to category {}, not {hash}", self.category)));
        }
        let n = cat.num_objects();
        let dims = (0..n)
            .map(|a| {
                let o = cat.object_name(a);
                self.dims.get(o).copied().ok_or_else(|| Error::Format(format!("missing dimension for `{o}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut bad = None;
        let m = FinModule::from_fn(cat, dims.clone(), |a, b, i| {
            let key = format!("{}|{}|{i}", cat.object_name(a), cat.object_name(b));
            match self.action.get(&key).map(|rows| Matrix::from_rows(cat.field(), dims[b], rows)) {
                Some(Ok(x)) if x.rows() == dims[a] => x,
                _ if dims[a] == 0 || dims[b] == 0 => Matrix::zeros(cat.field(), dims[a], dims[b]),
                _ => {
                    bad.get_or_insert(key);
                    Matrix::zeros(cat.field(), dims[a], dims[b])
                }
            }
        })?;
        if let Some(key) = bad {
            return Err(Error::Format(format!("missing or misshapen action `{key}`")));
        }
        m.check(cat)?;
        Ok(m)
    }
}

/// Canonical JSON text (sorted keys, compact).
pub fn module_to_json(cat: &FinCat, m: &FinModule) -> String {
    let v = serde_json::to_value(ModuleDoc::from_module(cat, m)).expect("module document serializes");
    serde_json::to_string(&v).expect("value serializes")
}

/// Parses and validates a module over `cat`.
pub fn module_from_json(cat: &FinCat, text: &str) -> Result<FinModule> {
    serde_json::from_str::<ModuleDoc>(text)?.to_module(cat)
}
