//! Classes of modules on a bounded census, and their hereditary closure.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fincat::FinCat;
use crate::limits::Limits;
use crate::modules::{all_submodules, enumerate_modules, FinModule, ModuleCensus};

/// The census of modules of total dimension `≤ bound`, with every
/// submodule/quotient pair and every direct sum inside the bound resolved
/// to census indices.
#[derive(Debug, Clone)]
pub struct CensusLattice {
    pub census: ModuleCensus,
    pub bound: usize,
    /// `subquotients[k]`: `(S, M_k/S)` over all submodules `S ≤ M_k`,
    /// deduplicated.
    pub subquotients: Vec<Vec<(usize, usize)>>,
    /// `sums[i][j]`: index of `M_i ⊕ M_j`, when within the bound.
    pub sums: Vec<Vec<Option<usize>>>,
}

fn locate(cat: &FinCat, census: &ModuleCensus, m: &FinModule, limits: &Limits) -> Result<usize> {
    census.locate(cat, m, limits)?.ok_or_else(|| {
        Error::InvalidModule(format!("module with dims {:?} missing from the census", m.dims()))
    })
}

pub fn census_lattice(cat: &FinCat, bound: usize, limits: &Limits) -> Result<CensusLattice> {
    let census = enumerate_modules(cat, bound, limits)?;
    let k = census.len();
    // Ordered collect keeps the result independent of scheduling.
    let subquotients = census
        .modules
        .par_iter()
        .map(|m| {
            let mut pairs = Vec::new();
            for s in all_submodules(cat, m, limits)? {
                let (sm, _) = m.submodule_module(cat, &s);
                let (q, _) = m.quotient(cat, &s);
                pairs.push((locate(cat, &census, &sm, limits)?, locate(cat, &census, &q, limits)?));
            }
            pairs.sort();
            pairs.dedup();
            Ok(pairs)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sums = vec![vec![None; k]; k];
    for i in 0..k {
        for j in i..k {
            let (x, y) = (&census.modules[i], &census.modules[j]);
            if x.total_dim() + y.total_dim() <= bound {
                let s = locate(cat, &census, &x.direct_sum(y), limits)?;
                sums[i][j] = Some(s);
                sums[j][i] = Some(s);
            }
        }
    }
    Ok(CensusLattice { census, bound, subquotients, sums })
}

/// Membership of each census module in a class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassFingerprint(pub Vec<bool>);

impl ClassFingerprint {
    pub fn contains(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i]).collect()
    }

    pub fn len(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl CensusLattice {
    pub fn len(&self) -> usize {
        self.census.len()
    }

    pub fn is_empty(&self) -> bool {
        self.census.is_empty()
    }

    pub fn module(&self, i: usize) -> &FinModule {
        &self.census.modules[i]
    }

    /// Index of the zero module.
    pub fn zero(&self) -> usize {
        self.census.modules.iter().position(|m| m.total_dim() == 0).expect("census contains 0")
    }

    /// Evaluates a predicate on every census member.
    pub fn class_of(&self, mut pred: impl FnMut(&FinModule) -> Result<bool>) -> Result<ClassFingerprint> {
        Ok(ClassFingerprint(self.census.modules.iter().map(&mut pred).collect::<Result<_>>()?))
    }

    /// The smallest class containing `seeds` and `0` that is closed, inside
    /// the census, under submodules, quotients, direct sums and extensions.
    pub fn hereditary_closure(&self, seeds: &[usize]) -> ClassFingerprint {
        let k = self.len();
        let mut inn = vec![false; k];
        inn[self.zero()] = true;
        for &s in seeds {
            inn[s] = true;
        }
        loop {
            let mut changed = false;
            for m in 0..k {
                if inn[m] {
                    for &(s, q) in &self.subquotients[m] {
                        for x in [s, q] {
                            if !inn[x] {
                                inn[x] = true;
                                changed = true;
                            }
                        }
                    }
                } else if self.subquotients[m].iter().any(|&(s, q)| inn[s] && inn[q]) {
                    inn[m] = true;
                    changed = true;
                }
            }
            for i in 0..k {
                for j in 0..k {
                    if let (true, true, Some(s)) = (inn[i], inn[j], self.sums[i][j]) {
                        if !inn[s] {
                            inn[s] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return ClassFingerprint(inn);
            }
        }
    }

    /// Locates `seeds` in the census and closes them.
    pub fn hereditary_closure_of(&self, cat: &FinCat, seeds: &[FinModule], limits: &Limits) -> Result<ClassFingerprint> {
        let idx = seeds
            .iter()
            .map(|m| {
                self.census.locate(cat, m, limits)?.ok_or_else(|| Error::NoWitness {
                    bound: self.bound,
                    reason: format!("seed of dimension {} exceeds the census bound", m.total_dim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.hereditary_closure(&idx))
    }

    /// Is the class closed under the census operations?
    pub fn is_hereditary_torsion(&self, class: &ClassFingerprint) -> bool {
        &self.hereditary_closure(&class.members()) == class
    }

    /// Closed under submodules, quotients and extensions only (no sums).
    pub fn is_closed_under_subquotients(&self, class: &ClassFingerprint) -> bool {
        (0..self.len()).all(|m| {
            let pairs = &self.subquotients[m];
            if class.contains(m) {
                pairs.iter().all(|&(s, q)| class.contains(s) && class.contains(q))
            } else {
                !pairs.iter().any(|&(s, q)| class.contains(s) && class.contains(q))
            }
        })
    }
}
